#include "brauer_cover/deletions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "brauer_cover/error.hpp"
#include "brauer_cover/smash.hpp"

namespace brauer_cover {

namespace {

constexpr int kDefaultPostCheckDepth = 3;

DeletionPlan make_plan(GroupSpec group, const BrauerPermutation& b, std::map<std::string, GroupElement> values,
                       std::vector<Representative> reps, std::vector<std::string> notes) {
  auto weight = GWeight::on_brauer(group, b, std::move(values));
  if (auto check = is_admissible(b, weight); !check) {
    throw Error(ErrorCode::NotAdmissible, "constructed weight is not admissible", check.witness.value_or(""));
  }
  return DeletionPlan{std::move(group), std::move(weight), std::move(reps), std::move(notes)};
}

DeletionPlan trivial_plan(const BrauerPermutation& b, GroupSpec group, std::string note) {
  return make_plan(std::move(group), b, {}, {}, {std::move(note)});
}

std::string generator_name(std::size_t i, std::size_t count) {
  return count == 1 ? std::string("a") : "a" + std::to_string(i + 1);
}

std::string orbit_text(const BrauerPermutation& b, std::size_t v) {
  std::string out = "(";
  for (auto e : b.vertices()[v]) out += (out.size() > 1 ? " " : "") + b.name(e);
  return out + ")";
}

void require_no_loops(const BrauerPermutation& b) {
  for (HalfEdgeId e = 0; e < b.size(); ++e) {
    if (b.vertex_of(e) == b.vertex_of(b.tau(e))) {
      throw Error(ErrorCode::HasLoops, "the Brauer graph has a loop", quiver_vertex_name(b, e));
    }
  }
}

// Vertices of the graph of multiple edges and its adjacency, by vertex index.
std::map<std::size_t, std::set<std::size_t>> multiple_edge_graph(const BrauerPermutation& b) {
  std::map<std::pair<std::size_t, std::size_t>, int> parallel;
  for (HalfEdgeId e = 0; e < b.size(); ++e) {
    if (b.tau(e) < e) continue;
    ++parallel[std::minmax(b.vertex_of(e), b.vertex_of(b.tau(e)))];
  }
  std::map<std::size_t, std::set<std::size_t>> delta;
  for (const auto& [uv, count] : parallel) {
    if (count < 2 || uv.first == uv.second) continue;
    delta[uv.first].insert(uv.second);
    delta[uv.second].insert(uv.first);
  }
  return delta;
}

}  // namespace

std::string_view deletion_kind_name(DeletionKind kind) {
  switch (kind) {
    case DeletionKind::Multiplicity: return "multiplicity";
    case DeletionKind::Loops: return "loops";
    case DeletionKind::MultipleEdges: return "multiedges";
    case DeletionKind::MultipleEdgesTree: return "multiedges-tree";
    case DeletionKind::Cycles: return "cycles";
  }
  return "unknown";
}

std::optional<DeletionKind> parse_deletion_kind(std::string_view name) {
  for (auto kind : {DeletionKind::Multiplicity, DeletionKind::Loops, DeletionKind::MultipleEdges,
                    DeletionKind::MultipleEdgesTree, DeletionKind::Cycles}) {
    if (deletion_kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

DeletionPlan delete_multiplicity(const BrauerPermutation& b) {
  std::vector<std::size_t> orbits;
  std::int64_t m = 1;
  for (std::size_t v = 0; v < b.vertices().size(); ++v) {
    if (b.vertex_multiplicity(v) > 1) {
      orbits.push_back(v);
      m = std::lcm(m, b.vertex_multiplicity(v));
    }
  }
  if (orbits.empty()) return trivial_plan(b, GroupSpec::trivial(), "multiplicity already trivial");

  const auto group = GroupSpec::cyclic(m);
  const auto a = group.generator("a");
  std::map<std::string, GroupElement> values;
  std::vector<Representative> reps;
  std::vector<std::string> notes;
  std::string orders;
  for (auto v : orbits) {
    const auto e = b.vertices()[v].front();
    const auto mi = b.vertex_multiplicity(v);
    values.emplace(b.name(e), group.power(a, m / mi));
    reps.push_back({b.name(e), "multiplicity", mi});
    notes.push_back("orbit " + orbit_text(b, v) + ": m_i = " + std::to_string(mi) + ", W(" + b.name(e) +
                    ") = " + group.format_word(values.at(b.name(e))));
    orders += (orders.empty() ? "" : ", ") + std::to_string(mi);
  }
  notes.insert(notes.begin(), "m = lcm(" + orders + ") = " + std::to_string(m) + ", G = C" + std::to_string(m));
  return make_plan(group, b, std::move(values), std::move(reps), std::move(notes));
}

DeletionPlan delete_loops(const BrauerPermutation& b) {
  const auto group = GroupSpec::cyclic(2);
  const auto a = group.generator("a");
  std::map<std::string, GroupElement> values;
  std::vector<Representative> reps;
  std::vector<std::string> notes{"G = C2"};
  for (HalfEdgeId e = 0; e < b.size(); ++e) {
    const auto f = b.tau(e);
    if (f < e || b.vertex_of(e) != b.vertex_of(f)) continue;
    values.emplace(b.name(e), a);
    values.emplace(b.name(f), a);
    reps.push_back({b.name(e), "loop", 2});
    notes.push_back("loop " + quiver_vertex_name(b, e) + ": W(" + b.name(e) + ") = W(" + b.name(f) + ") = a");
  }
  if (reps.empty()) notes.push_back("no loops; identity weight");
  return make_plan(group, b, std::move(values), std::move(reps), std::move(notes));
}

DeletionPlan delete_multiple_edges(const BrauerPermutation& b) {
  require_no_loops(b);
  const auto delta = multiple_edge_graph(b);
  if (delta.empty()) return trivial_plan(b, GroupSpec::trivial(), "no multiple edges");

  std::vector<CyclicFactor> factors;
  std::size_t i = 0;
  for (const auto& [v, _] : delta) {
    factors.push_back({generator_name(i++, delta.size()), static_cast<std::int64_t>(b.vertices()[v].size())});
  }
  const auto group = GroupSpec::abelian(factors);
  std::map<std::string, GroupElement> values;
  std::vector<Representative> reps;
  std::vector<std::string> notes;
  std::string orders;
  i = 0;
  for (const auto& [v, _] : delta) {
    const auto& f = factors[i++];
    const auto ai = group.generator(f.name);
    for (auto e : b.vertices()[v]) values.emplace(b.name(e), ai);
    reps.push_back({b.name(b.vertices()[v].front()), "multiple edge vertex", f.order});
    notes.push_back("orbit " + orbit_text(b, v) + ": n_i = " + std::to_string(f.order) + ", W = " + f.name +
                    " on the orbit");
    orders += (orders.empty() ? "C" : " x C") + std::to_string(f.order);
  }
  notes.insert(notes.begin(), "G = " + orders);
  return make_plan(group, b, std::move(values), std::move(reps), std::move(notes));
}

DeletionPlan delete_multiple_edges_tree(const BrauerPermutation& b) {
  require_no_loops(b);
  const auto delta = multiple_edge_graph(b);
  if (delta.empty()) return trivial_plan(b, GroupSpec::trivial(), "no multiple edges");

  // Components are 2-coloured by BFS from their least vertex, which gets
  // colour 0; colour 1 is the weighted class.
  std::map<std::size_t, int> colour;
  std::map<std::size_t, std::size_t> parent;
  std::size_t components = 0;
  for (const auto& [root, _] : delta) {
    if (colour.contains(root)) continue;
    ++components;
    colour[root] = 0;
    parent[root] = root;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto w : delta.at(u)) {
        if (!colour.contains(w)) {
          colour[w] = 1 - colour[u];
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u] && parent[w] != u) {
          // A non-tree edge: report the cycle through the BFS tree.
          std::vector<std::size_t> left{u}, right{w};
          std::set<std::size_t> seen{u};
          for (auto x = u; parent[x] != x; x = parent[x]) {
            left.push_back(parent[x]);
            seen.insert(parent[x]);
          }
          auto meet = w;
          while (!seen.contains(meet)) right.push_back(meet = parent[meet]);
          std::string witness;
          for (auto x : left) {
            witness += (witness.empty() ? "" : " - ") + orbit_text(b, x);
            if (x == meet) break;
          }
          right.pop_back();
          for (auto it = right.rbegin(); it != right.rend(); ++it) witness += " - " + orbit_text(b, *it);
          witness += " - " + orbit_text(b, u);
          throw Error(ErrorCode::DeltaNotForest, "the graph of multiple edges has a cycle", witness);
        }
      }
    }
  }

  std::vector<std::size_t> chosen;
  std::int64_t n = 1;
  for (const auto& [v, c] : colour) {
    if (c == 1) {
      chosen.push_back(v);
      n = std::lcm(n, static_cast<std::int64_t>(b.vertices()[v].size()));
    }
  }
  const auto group = GroupSpec::cyclic(n);
  const auto a = group.generator("a");
  std::map<std::string, GroupElement> values;
  std::vector<Representative> reps;
  std::vector<std::string> notes;
  if (components > 1) {
    notes.push_back("warning: the graph of multiple edges is a forest with " + std::to_string(components) +
                    " components; each is coloured separately");
  }
  notes.push_back("colour class: vertices at odd distance from the least vertex of each component");
  std::string orders;
  for (auto v : chosen) {
    const auto ni = static_cast<std::int64_t>(b.vertices()[v].size());
    const auto bi = group.power(a, n / ni);
    for (auto e : b.vertices()[v]) values.emplace(b.name(e), bi);
    reps.push_back({b.name(b.vertices()[v].front()), "colour class", ni});
    notes.push_back("orbit " + orbit_text(b, v) + ": n_i = " + std::to_string(ni) + ", W = " +
                    group.format_word(bi) + " on the orbit");
    orders += (orders.empty() ? "" : ", ") + std::to_string(ni);
  }
  notes.insert(notes.begin(), "n = lcm(" + orders + ") = " + std::to_string(n) + ", G = C" + std::to_string(n));
  return make_plan(group, b, std::move(values), std::move(reps), std::move(notes));
}

DeletionPlan delete_cycles(const BrauerPermutation& b) {
  const auto graph = brauer_graph(b);
  const auto cls = classify(graph);
  if (cls.cycle_vertices.empty()) return trivial_plan(b, GroupSpec::trivial(), "the Brauer graph has no cycles");

  std::vector<std::size_t> orbits;
  for (auto gv : cls.cycle_vertices) orbits.push_back(b.vertex_of(b.at(graph.vertices[gv].cycle.front())));
  std::sort(orbits.begin(), orbits.end());

  std::vector<std::size_t> weighted;
  for (auto v : orbits) {
    if (b.vertices()[v].size() >= 2) weighted.push_back(v);
  }
  std::vector<CyclicFactor> factors;
  for (std::size_t i = 0; i < weighted.size(); ++i) factors.push_back({generator_name(i, weighted.size()), kInfiniteOrder});
  const auto group = GroupSpec::abelian(factors);

  std::map<std::string, GroupElement> values;
  std::vector<Representative> reps;
  std::vector<std::string> notes{"G = Z^" + std::to_string(weighted.size())};
  std::size_t next = 0;
  for (auto v : orbits) {
    const auto& cycle = b.vertices()[v];
    const auto ni = static_cast<std::int64_t>(cycle.size());
    reps.push_back({b.name(cycle.front()), "cycle vertex", ni});
    if (ni < 2) {
      notes.push_back("orbit " + orbit_text(b, v) + ": n_i = 1, trivial factor");
      continue;
    }
    const auto name = factors[next++].name;
    const auto ai = group.generator(name);
    for (std::size_t j = 0; j + 1 < cycle.size(); ++j) values.emplace(b.name(cycle[j]), ai);
    values.emplace(b.name(cycle.back()), group.power(ai, 1 - ni));
    notes.push_back("orbit " + orbit_text(b, v) + ": n_i = " + std::to_string(ni) + ", W = " + name +
                    " along the orbit and " + group.format_word(group.power(ai, 1 - ni)) + " on " +
                    b.name(cycle.back()));
  }
  return make_plan(group, b, std::move(values), std::move(reps), std::move(notes));
}

DeletionPlan plan_deletion(DeletionKind kind, const BrauerPermutation& b) {
  switch (kind) {
    case DeletionKind::Multiplicity: return delete_multiplicity(b);
    case DeletionKind::Loops: return delete_loops(b);
    case DeletionKind::MultipleEdges: return delete_multiple_edges(b);
    case DeletionKind::MultipleEdgesTree: return delete_multiple_edges_tree(b);
    case DeletionKind::Cycles: return delete_cycles(b);
  }
  throw Error(ErrorCode::MalformedInput, "unknown deletion kind");
}

bool PostCheck::ok() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.ok; });
}

CheckResult window_is_forest(const BrauerGraph& graph) {
  std::vector<std::size_t> parent(graph.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : graph.edges) {
    const auto u = root(e.u), v = root(e.v);
    if (u == v) return CheckResult{false, e.name};
    parent[u] = v;
  }
  return {};
}

PostCheck post_check(DeletionKind kind, const BrauerPermutation& b, const DeletionPlan& plan,
                     std::optional<int> depth) {
  PostCheck out;
  const bool finite = plan.group.is_finite();
  const auto cover = smash_brauer(b, plan.weight, finite ? std::nullopt : std::optional(depth.value_or(kDefaultPostCheckDepth)));
  const auto graph = cover.graph();
  const auto cls = classify(graph);

  auto first_vertex = [&](auto pred) -> std::string {
    for (const auto& v : graph.vertices) {
      if (pred(v)) return v.name;
    }
    return {};
  };
  auto trivial_multiplicity = [&] {
    const auto w = first_vertex([](const GraphVertex& v) { return v.multiplicity != 1; });
    out.conditions.push_back({"trivial multiplicity", w.empty(), w});
  };
  auto no_loops = [&] {
    std::string w;
    for (const auto& e : graph.edges) {
      if (e.is_loop()) {
        w = e.name;
        break;
      }
    }
    out.conditions.push_back({"no loops", !cls.has_loops, w});
  };
  auto no_multiple_edges = [&] {
    std::string w;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : graph.edges) {
      if (!e.is_loop() && !seen.insert(std::minmax(e.u, e.v)).second) {
        w = e.name;
        break;
      }
    }
    out.conditions.push_back({"no multiple edges", !cls.has_multiple_edges, w});
  };

  switch (kind) {
    case DeletionKind::Multiplicity:
      trivial_multiplicity();
      break;
    case DeletionKind::Loops:
      no_loops();
      if (b.multiplicity_trivial()) trivial_multiplicity();
      break;
    case DeletionKind::MultipleEdges:
    case DeletionKind::MultipleEdgesTree:
      no_loops();
      no_multiple_edges();
      if (b.multiplicity_trivial()) trivial_multiplicity();
      break;
    case DeletionKind::Cycles: {
      const auto forest = window_is_forest(graph);
      out.conditions.push_back({"acyclic window", forest.ok, forest.witness.value_or("")});
      // Every special cycle has weight 1, so orbit lengths and hence
      // multiplicities are those of the base.
      std::string w;
      for (std::size_t i = 0; i < cover.size(); ++i) {
        if (cover.multiplicity[i] != b.multiplicity(cover.half_edges[i].base)) {
          w = cover.names[i];
          break;
        }
      }
      out.conditions.push_back({"multiplicity preserved", w.empty(), w});
      if (b.multiplicity_trivial()) trivial_multiplicity();
      break;
    }
  }
  return out;
}

}  // namespace brauer_cover
