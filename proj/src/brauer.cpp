#include "brauer_cover/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "brauer_cover/error.hpp"

namespace brauer_cover {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

}  // namespace

std::vector<Violation> validate(const BrauerPermutationData& data) {
  std::vector<Violation> out;
  auto report = [&](std::string kind, std::vector<std::string> edges, std::string message) {
    out.push_back(Violation{std::move(kind), std::move(edges), std::move(message)});
  };

  if (data.half_edges.empty()) report("empty", {}, "the set of half edges is empty");
  std::set<std::string> names;
  for (const auto& e : data.half_edges) {
    if (e.empty()) report("empty name", {e}, "half edge names must be nonempty");
    if (!names.insert(e).second) report("duplicate half edge", {e}, "half edge listed twice");
  }
  if (names.size() % 2 != 0) report("odd size", {}, "a free involution needs an even number of half edges");

  auto check_map = [&](const std::map<std::string, std::string>& map, const std::string& label) {
    bool ok = true;
    std::map<std::string, std::vector<std::string>> preimages;
    for (const auto& [from, to] : map) {
      if (!names.contains(from)) {
        report(label + " unknown half edge", {from}, label + " is defined on an unknown half edge");
        ok = false;
      }
      if (!names.contains(to)) {
        report(label + " unknown image", {from, to}, label + " maps to an unknown half edge");
        ok = false;
      }
      preimages[to].push_back(from);
    }
    for (const auto& e : names) {
      if (!map.contains(e)) {
        report(label + " missing", {e}, label + " is not defined on this half edge");
        ok = false;
      }
      const auto it = preimages.find(e);
      if (it == preimages.end()) {
        report(label + " not bijective", {e}, "half edge has no " + label + "-preimage");
        ok = false;
      } else if (it->second.size() > 1) {
        auto edges = it->second;
        edges.insert(edges.begin(), e);
        report(label + " not bijective", edges, "half edge has several " + label + "-preimages");
        ok = false;
      }
    }
    return ok;
  };

  const bool sigma_ok = check_map(data.sigma, "sigma");
  const bool tau_ok = check_map(data.tau, "tau");
  if (tau_ok) {
    for (const auto& [e, f] : data.tau) {
      if (e == f) report("tau not free", {e}, "tau fixes this half edge");
      else if (data.tau.at(f) != e) report("tau not involution", {e, f}, "tau(tau(e)) != e");
    }
  }

  for (const auto& [e, m] : data.multiplicity) {
    if (!names.contains(e)) report("multiplicity unknown half edge", {e}, "multiplicity keyed by unknown half edge");
    if (m < 1) report("multiplicity not positive", {e}, "multiplicity must be >= 1");
  }
  if (sigma_ok) {
    std::set<std::string> visited;
    for (const auto& start : names) {
      if (visited.contains(start)) continue;
      std::vector<std::string> orbit;
      for (auto e = start; visited.insert(e).second; e = data.sigma.at(e)) orbit.push_back(e);
      std::vector<std::string> keyed;
      for (const auto& e : orbit)
        if (data.multiplicity.contains(e)) keyed.push_back(e);
      if (keyed.empty()) {
        report("multiplicity missing", {orbit.front()}, "no multiplicity for sigma-orbit " + join(orbit, " "));
      } else if (keyed.size() > 1) {
        report("multiplicity duplicated", keyed, "several multiplicity entries for one sigma-orbit");
      }
    }
  }
  return out;
}

BrauerPermutation BrauerPermutation::from_data(const BrauerPermutationData& data) {
  const auto violations = validate(data);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw Error(ErrorCode::InvalidBrauer, v.kind + ": " + v.message, join(v.half_edges, ","));
  }
  std::vector<std::string> names(data.half_edges.begin(), data.half_edges.end());
  std::sort(names.begin(), names.end());
  auto idx = [&](const std::string& s) {
    return static_cast<HalfEdgeId>(std::lower_bound(names.begin(), names.end(), s) - names.begin());
  };
  std::vector<HalfEdgeId> sigma(names.size()), tau(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    sigma[i] = idx(data.sigma.at(names[i]));
    tau[i] = idx(data.tau.at(names[i]));
  }
  std::vector<std::int64_t> mult(names.size(), 1);
  for (const auto& [key, m] : data.multiplicity) {
    auto e = idx(key);
    do {
      mult[e] = m;
      e = sigma[e];
    } while (e != idx(key));
  }
  return from_arrays(std::move(names), sigma, tau, mult);
}

BrauerPermutation BrauerPermutation::from_arrays(std::vector<std::string> names, std::span<const HalfEdgeId> sigma,
                                                 std::span<const HalfEdgeId> tau,
                                                 std::span<const std::int64_t> multiplicity) {
  const auto n = names.size();
  if (n == 0) throw Error(ErrorCode::InvalidBrauer, "empty: the set of half edges is empty");
  if (sigma.size() != n || tau.size() != n || multiplicity.size() != n)
    throw Error(ErrorCode::InvalidBrauer, "array sizes do not match");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;
  for (std::size_t i = 1; i < n; ++i) {
    if (names[order[i]] == names[order[i - 1]])
      throw Error(ErrorCode::InvalidBrauer, "duplicate half edge", names[order[i]]);
  }

  BrauerPermutation b;
  b.names_.resize(n);
  b.sigma_.resize(n);
  b.tau_.resize(n);
  b.sigma_inv_.assign(n, kNoHalfEdge);
  std::vector<std::int64_t> mult(n);
  for (std::size_t old = 0; old < n; ++old) {
    if (sigma[old] >= n || tau[old] >= n) throw Error(ErrorCode::InvalidBrauer, "index out of range", names[old]);
    const auto e = rank[old];
    b.names_[e] = names[old];
    b.sigma_[e] = rank[sigma[old]];
    b.tau_[e] = rank[tau[old]];
    mult[e] = multiplicity[old];
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (b.sigma_inv_[b.sigma_[e]] != kNoHalfEdge)
      throw Error(ErrorCode::InvalidBrauer, "sigma not bijective", b.names_[b.sigma_[e]]);
    b.sigma_inv_[b.sigma_[e]] = e;
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (b.tau_[e] == e) throw Error(ErrorCode::InvalidBrauer, "tau not free", b.names_[e]);
    if (b.tau_[b.tau_[e]] != e) throw Error(ErrorCode::InvalidBrauer, "tau not involution", b.names_[e]);
  }
  b.vertex_of_.assign(n, kNoHalfEdge);
  for (std::size_t e = 0; e < n; ++e) {
    if (b.vertex_of_[e] != kNoHalfEdge) continue;
    std::vector<HalfEdgeId> cycle;
    for (auto f = e; b.vertex_of_[f] == kNoHalfEdge; f = b.sigma_[f]) {
      b.vertex_of_[f] = b.vertices_.size();
      cycle.push_back(f);
      if (mult[f] != mult[e])
        throw Error(ErrorCode::InvalidBrauer, "multiplicity not constant on sigma-orbit", b.names_[f]);
    }
    if (mult[e] < 1) throw Error(ErrorCode::InvalidBrauer, "multiplicity not positive", b.names_[e]);
    b.vertices_.push_back(std::move(cycle));
    b.vertex_multiplicity_.push_back(mult[e]);
  }
  return b;
}

std::optional<HalfEdgeId> BrauerPermutation::find(std::string_view name) const {
  const auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<HalfEdgeId>(it - names_.begin());
}

HalfEdgeId BrauerPermutation::at(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw Error(ErrorCode::UnknownHalfEdge, "unknown half edge", std::string(name));
}

std::vector<HalfEdgeId> BrauerPermutation::sigma_orbit(HalfEdgeId e) const {
  std::vector<HalfEdgeId> out{e};
  for (auto f = sigma_[e]; f != e; f = sigma_[f]) out.push_back(f);
  return out;
}

bool BrauerPermutation::multiplicity_trivial() const {
  return std::all_of(vertex_multiplicity_.begin(), vertex_multiplicity_.end(), [](auto m) { return m == 1; });
}

BrauerPermutationData BrauerPermutation::to_data() const {
  BrauerPermutationData d;
  d.half_edges = names_;
  for (std::size_t e = 0; e < size(); ++e) {
    d.sigma[names_[e]] = names_[sigma_[e]];
    d.tau[names_[e]] = names_[tau_[e]];
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) d.multiplicity[names_[vertices_[v].front()]] = vertex_multiplicity_[v];
  return d;
}

std::size_t BrauerGraph::vertex_of(std::string_view half_edge) const {
  if (auto it = half_edge_vertex.find(half_edge); it != half_edge_vertex.end()) return it->second;
  throw Error(ErrorCode::UnknownHalfEdge, "unknown half edge", std::string(half_edge));
}

BrauerGraph make_brauer_graph(std::span<const std::string> names, std::span<const HalfEdgeId> sigma,
                              std::span<const HalfEdgeId> tau, std::span<const std::int64_t> multiplicity) {
  const auto n = names.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });

  BrauerGraph g;
  std::vector<std::size_t> vertex_of(n, kNoHalfEdge);
  for (auto start : order) {
    if (vertex_of[start] != kNoHalfEdge) continue;
    GraphVertex v;
    v.multiplicity = multiplicity[start];
    for (auto e = start; vertex_of[e] == kNoHalfEdge; e = sigma[e]) {
      vertex_of[e] = g.vertices.size();
      v.cycle.push_back(names[e]);
    }
    v.name = "[" + join(v.cycle, " ") + "]";
    g.vertices.push_back(std::move(v));
  }
  for (auto e : order) {
    g.half_edge_vertex.emplace(names[e], vertex_of[e]);
    if (tau[e] == kNoHalfEdge) {
      g.dangling.push_back(DanglingHalfEdge{names[e], vertex_of[e]});
      continue;
    }
    const auto f = tau[e];
    if (names[f] < names[e]) continue;
    g.edges.push_back(GraphEdge{"{" + names[e] + "," + names[f] + "}", names[e], names[f], vertex_of[e], vertex_of[f]});
  }
  return g;
}

BrauerGraph brauer_graph(const BrauerPermutation& b) {
  std::vector<std::int64_t> mult(b.size());
  for (std::size_t e = 0; e < b.size(); ++e) mult[e] = b.multiplicity(e);
  return make_brauer_graph(b.names(), b.sigma_array(), b.tau_array(), mult);
}

GraphClassification classify(const BrauerGraph& graph) {
  GraphClassification c;
  const auto nv = graph.vertices.size();
  for (const auto& v : graph.vertices) c.multiplicity_trivial = c.multiplicity_trivial && v.multiplicity == 1;

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);  // (neighbour, edge id)
  std::vector<bool> on_cycle(nv, false);
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const auto& e = graph.edges[i];
    if (e.is_loop()) {
      c.has_loops = true;
      on_cycle[e.u] = true;
      continue;
    }
    if (!pairs.insert(std::minmax(e.u, e.v)).second) c.has_multiple_edges = true;
    adj[e.u].emplace_back(e.v, i);
    adj[e.v].emplace_back(e.u, i);
  }

  // Biconnected components over edge ids; parallel edges are distinct ids,
  // so a doubled edge forms a two-edge block.
  std::vector<int> disc(nv, -1), low(nv, 0);
  std::vector<std::size_t> edge_stack;
  int timer = 0;
  std::size_t components = 0;
  auto close_block = [&](std::size_t upto_edge) {
    std::vector<std::size_t> block;
    while (!edge_stack.empty()) {
      const auto top = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(top);
      if (top == upto_edge) break;
    }
    if (block.size() >= 2) {
      for (auto id : block) {
        on_cycle[graph.edges[id].u] = true;
        on_cycle[graph.edges[id].v] = true;
      }
    }
  };
  struct Frame {
    std::size_t vertex;
    std::size_t parent_edge;
    std::size_t next = 0;
  };
  for (std::size_t root = 0; root < nv; ++root) {
    if (disc[root] != -1) continue;
    ++components;
    std::vector<Frame> stack{{root, kNoHalfEdge}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& fr = stack.back();
      if (fr.next < adj[fr.vertex].size()) {
        const auto [w, id] = adj[fr.vertex][fr.next++];
        if (id == fr.parent_edge) continue;
        if (disc[w] == -1) {
          edge_stack.push_back(id);
          disc[w] = low[w] = timer++;
          stack.push_back(Frame{w, id});
        } else if (disc[w] < disc[fr.vertex]) {
          edge_stack.push_back(id);
          low[fr.vertex] = std::min(low[fr.vertex], disc[w]);
        }
      } else {
        const auto done = fr;
        stack.pop_back();
        if (!stack.empty()) {
          auto& parent = stack.back();
          low[parent.vertex] = std::min(low[parent.vertex], low[done.vertex]);
          if (low[done.vertex] >= disc[parent.vertex]) close_block(done.parent_edge);
        }
      }
    }
  }
  c.is_connected = components <= 1;
  c.is_tree = c.is_connected && !c.has_loops && graph.edges.size() + 1 == nv;
  for (std::size_t v = 0; v < nv; ++v)
    if (on_cycle[v]) c.cycle_vertices.push_back(v);
  return c;
}

std::string quiver_vertex_name(const BrauerPermutation& b, HalfEdgeId e) {
  const auto f = b.tau(e);
  const auto lo = std::min(e, f), hi = std::max(e, f);
  return "{" + b.name(lo) + "," + b.name(hi) + "}";
}

std::string quiver_arrow_name(const BrauerPermutation& b, HalfEdgeId e) { return "alpha[" + b.name(e) + "]"; }

std::vector<HalfEdgeId> special_cycle(const BrauerPermutation& b, HalfEdgeId e) { return b.sigma_orbit(e); }

BoundQuiver bound_quiver(const BrauerPermutation& b) {
  BoundQuiver q;
  std::vector<std::size_t> vertex(b.size(), kNoHalfEdge);
  for (HalfEdgeId e = 0; e < b.size(); ++e) {
    if (b.tau(e) < e) continue;
    vertex[e] = vertex[b.tau(e)] = q.add_vertex(quiver_vertex_name(b, e));
  }
  for (HalfEdgeId e = 0; e < b.size(); ++e) q.add_arrow(quiver_arrow_name(b, e), vertex[e], vertex[b.sigma(e)]);

  for (HalfEdgeId e = 0; e < b.size(); ++e) {
    q.add_relation(RelationGenerator{{RelationTerm{1, {e, b.tau(b.sigma(e))}}}});
  }
  auto power_path = [&](HalfEdgeId e) {
    const auto cycle = special_cycle(b, e);
    Path p;
    for (std::int64_t k = 0; k < b.multiplicity(e); ++k) p.insert(p.end(), cycle.begin(), cycle.end());
    return p;
  };
  for (HalfEdgeId e = 0; e < b.size(); ++e) {
    if (b.tau(e) < e) continue;
    q.add_relation(RelationGenerator{{RelationTerm{1, power_path(e)}, RelationTerm{-1, power_path(b.tau(e))}}});
  }
  return q;
}

}  // namespace brauer_cover
