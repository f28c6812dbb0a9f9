#pragma once

// Test-side oracles. Nothing here calls into the smash, deletions or iso
// modules; they recompute the expected answers from first principles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "brauer_cover/brauer.hpp"
#include "brauer_cover/groups.hpp"
#include "brauer_cover/iso.hpp"
#include "brauer_cover/random.hpp"
#include "brauer_cover/weights.hpp"

namespace oracle {

using namespace brauer_cover;

inline std::vector<GroupSpec> small_groups() {
  return {GroupSpec::cyclic(2), GroupSpec::cyclic(3),
          GroupSpec::abelian({{"a", 2}, {"b", 2}}), GroupSpec::cyclic(6)};
}

inline GroupSpec s3() { return GroupSpec::permutation(3, {{"a", {1, 2, 0}}, {"b", {1, 0, 2}}}); }

/// "12+" -> "12": the edge label of a half edge named "<edge><sign>[@layer]".
inline std::string edge_label(const std::string& half_edge) {
  const auto at = half_edge.find('@');
  const auto base = half_edge.substr(0, at);
  return base.substr(0, base.size() - 1);
}

/// B_W computed straight from the defining formulas, keyed by "e@g".
struct Smash {
  std::map<std::string, std::string> sigma;
  std::map<std::string, std::string> tau;
  std::map<std::string, std::int64_t> multiplicity;
  std::vector<std::vector<std::string>> orbits;
};

inline Smash smash(const BrauerPermutation& b, const GWeight& w) {
  const auto& group = w.group();
  const auto name = [&](HalfEdgeId e, const GroupElement& g) { return b.name(e) + "@" + group.format_word(g); };
  Smash out;
  for (HalfEdgeId e = 0; e < b.size(); ++e) {
    for (const auto& g : group.enumerate()) {
      out.sigma[name(e, g)] = name(b.sigma(e), group.multiply(w.at(b.name(e)), g));
      out.tau[name(e, g)] = name(b.tau(e), g);
    }
  }
  std::set<std::string> seen;
  for (HalfEdgeId e = 0; e < b.size(); ++e) {
    for (const auto& g : group.enumerate()) {
      const auto start = name(e, g);
      if (seen.contains(start)) continue;
      std::vector<std::string> orbit;
      for (auto x = start; seen.insert(x).second; x = out.sigma[x]) orbit.push_back(x);
      const auto m = b.multiplicity(e) * static_cast<std::int64_t>(b.orbit_length(e));
      for (const auto& x : orbit) out.multiplicity[x] = m / static_cast<std::int64_t>(orbit.size());
      out.orbits.push_back(std::move(orbit));
    }
  }
  return out;
}

/// Vertices lying on some cycle (loops and parallel pairs included), found by
/// enumerating closed trails with no repeated vertex.
inline std::set<std::size_t> cycle_vertices(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::set<std::size_t> out;
  std::vector<bool> used(edges.size(), false);
  std::vector<bool> on_path(n, false);
  std::vector<std::size_t> path;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t at) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (used[i]) continue;
      const auto [u, v] = edges[i];
      if (u != at && v != at) continue;
      const auto next = u == at ? v : u;
      if (next == start) {
        out.insert(path.begin(), path.end());
        continue;
      }
      if (on_path[next]) continue;
      used[i] = true;
      on_path[next] = true;
      path.push_back(next);
      walk(start, next);
      path.pop_back();
      on_path[next] = false;
      used[i] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    on_path[s] = true;
    path = {s};
    walk(s, s);
    on_path[s] = false;
  }
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> edge_list(const BrauerGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : g.edges) out.emplace_back(e.u, e.v);
  return out;
}

/// A multigraph is a forest iff every edge joins two different components.
inline bool has_cycle(const BrauerGraph& g) {
  std::vector<std::size_t> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (const auto& e : g.edges) {
    const auto a = root(e.u), b = root(e.v);
    if (a == b) return true;
    parent[a] = b;
  }
  return false;
}

inline std::size_t parallel_pairs(const BrauerGraph& g) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> count;
  for (const auto& e : g.edges) {
    if (e.u != e.v) ++count[std::minmax(e.u, e.v)];
  }
  std::size_t pairs = 0;
  for (const auto& [_, c] : count) pairs += c * (c - 1) / 2;
  return pairs;
}

inline std::size_t loop_count(const BrauerGraph& g) {
  return static_cast<std::size_t>(std::count_if(g.edges.begin(), g.edges.end(), [](const auto& e) { return e.u == e.v; }));
}

inline Multigraph complete_bipartite(std::size_t p, std::size_t q) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) edges.emplace_back(i, p + j);
  }
  return Multigraph::from_edges(p + q, edges);
}

/// Renames every half edge through `rename`; the result is isomorphic to b.
inline BrauerPermutation relabel(const BrauerPermutation& b, const std::function<std::string(const std::string&)>& rename) {
  const auto data = b.to_data();
  BrauerPermutationData out;
  for (const auto& e : data.half_edges) out.half_edges.push_back(rename(e));
  for (const auto& [k, v] : data.sigma) out.sigma[rename(k)] = rename(v);
  for (const auto& [k, v] : data.tau) out.tau[rename(k)] = rename(v);
  for (const auto& [k, v] : data.multiplicity) out.multiplicity[rename(k)] = v;
  return BrauerPermutation::from_data(out);
}

/// A random permutation of the half-edge names of b.
inline BrauerPermutation shuffle_names(Rng& rng, const BrauerPermutation& b) {
  auto names = b.names();
  auto shuffled = names;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::map<std::string, std::string> to;
  for (std::size_t i = 0; i < names.size(); ++i) to[names[i]] = "x" + shuffled[i];
  return relabel(b, [&](const std::string& s) { return to.at(s); });
}

}  // namespace oracle
