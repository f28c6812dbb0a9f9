#include <doctest.h>

#include <queue>

#include "brauer_cover/deletions.hpp"
#include "brauer_cover/error.hpp"
#include "brauer_cover/fixtures.hpp"
#include "brauer_cover/smash.hpp"
#include "support.hpp"

using namespace brauer_cover;

namespace {

const Fixture& fixture(std::string_view id) { return *find_fixture(id); }

/// Half edges "<k>+" / "<k>-" around the given sigma cycles, tau swapping the sign.
BrauerPermutation from_cycles(const std::vector<std::vector<std::string>>& cycles,
                              const std::map<std::string, std::int64_t>& mult = {}) {
  BrauerPermutationData d;
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      d.half_edges.push_back(c[i]);
      d.sigma[c[i]] = c[(i + 1) % c.size()];
      auto t = c[i];
      t.back() = t.back() == '+' ? '-' : '+';
      d.tau[c[i]] = t;
    }
    const auto it = mult.find(c.front());
    d.multiplicity[c.front()] = it == mult.end() ? 1 : it->second;
  }
  return BrauerPermutation::from_data(d);
}

std::string w_of(const DeletionPlan& p, const std::string& e) { return p.group.format_word(p.weight.at(e)); }

bool all_identity(const DeletionPlan& p) {
  for (const auto& [_, g] : p.weight.values()) {
    if (!p.group.is_identity(g)) return false;
  }
  return true;
}

bool is_bipartite(const BrauerGraph& g) {
  std::vector<int> colour(g.vertices.size(), -1);
  std::vector<std::vector<std::size_t>> adj(g.vertices.size());
  for (const auto& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (std::size_t s = 0; s < colour.size(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<std::size_t> todo;
    todo.push(s);
    while (!todo.empty()) {
      const auto u = todo.front();
      todo.pop();
      for (auto v : adj[u]) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          todo.push(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

BrauerPermutation strip_layer(const BrauerPermutation& bw) {
  return oracle::relabel(bw, [](const std::string& s) { return s.substr(0, s.find('@')); });
}

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::MalformedInput;
}

}  // namespace

TEST_CASE("deletion kind names") {
  for (auto k : {DeletionKind::Multiplicity, DeletionKind::Loops, DeletionKind::MultipleEdges,
                 DeletionKind::MultipleEdgesTree, DeletionKind::Cycles}) {
    CHECK(parse_deletion_kind(deletion_kind_name(k)) == k);
  }
  CHECK_FALSE(parse_deletion_kind("edges").has_value());
}

TEST_CASE("delete multiplicity") {
  const auto& b = *fixture("FIX-MULT").brauer;
  const auto plan = delete_multiplicity(b);
  CHECK(plan.group == GroupSpec::cyclic(6));
  CHECK(w_of(plan, "1+") == "a^3");
  CHECK(w_of(plan, "1-") == "a^2");
  CHECK(plan.weight == *fixture("FIX-MULT").weight);
  CHECK(post_check(DeletionKind::Multiplicity, b, plan).ok());

  const auto& trivial = *fixture("FIX-LOOP").brauer;
  const auto none = delete_multiplicity(trivial);
  CHECK(none.group.order() == 1);
  CHECK(all_identity(none));
  CHECK(strip_layer(smash_brauer(trivial, none.weight).to_brauer()) == trivial);

  // One orbit of length 2 with m = 4: C4, a on the representative, orbit of length 8.
  const auto b4 = from_cycles({{"1+", "2+"}, {"1-"}, {"2-"}}, {{"1+", 4}});
  const auto p4 = delete_multiplicity(b4);
  CHECK(p4.group == GroupSpec::cyclic(4));
  CHECK(w_of(p4, "1+") == "a");
  CHECK(w_of(p4, "2+") == "1");
  const auto expected = oracle::smash(b4, p4.weight);
  const auto bw = smash_brauer(b4, p4.weight);
  const auto start = *bw.find(b4.at("1+"), p4.group.identity());
  CHECK(bw.orbit_sizes()[start] == 8);
  CHECK(bw.multiplicity[start] == 1);
  CHECK(expected.multiplicity.at("1+@1") == 1);
  CHECK(bw.to_brauer().multiplicity_trivial());
}

TEST_CASE("delete loops") {
  const auto& b = *fixture("FIX-LOOP").brauer;
  const auto plan = delete_loops(b);
  CHECK(plan.group == GroupSpec::cyclic(2));
  for (const auto& e : {"1+", "1-", "3+", "3-"}) CHECK(w_of(plan, e) == "a");
  for (const auto& e : {"2+", "2-"}) CHECK(w_of(plan, e) == "1");
  const auto g = smash_brauer(b, plan.weight).graph();
  CHECK(g.vertices.size() == 4);
  CHECK(g.edges.size() == 6);
  CHECK(oracle::loop_count(g) == 0);
  CHECK(post_check(DeletionKind::Loops, b, plan).ok());

  const auto& fix1 = *fixture("FIX1").brauer;
  const auto p1 = delete_loops(fix1);
  CHECK(w_of(p1, "1+") == "a");
  CHECK(w_of(p1, "1-") == "a");
  CHECK(w_of(p1, "2+") == "1");
  CHECK(w_of(p1, "2-") == "1");
  const auto bw1 = smash_brauer(fix1, p1.weight);
  CHECK(bw1.size() == 8);
  CHECK(oracle::loop_count(bw1.graph()) == 0);
  const auto o1 = oracle::smash(fix1, p1.weight);
  for (std::size_t i = 0; i < bw1.size(); ++i) CHECK(bw1.names[bw1.sigma[i]] == o1.sigma.at(bw1.names[i]));

  const auto& dbl = *fixture("FIX-DOUBLE").brauer;
  const auto p2 = delete_loops(dbl);
  CHECK(p2.group == GroupSpec::cyclic(2));
  CHECK(all_identity(p2));
  const auto g2 = smash_brauer(dbl, p2.weight).graph();
  const auto base = brauer_graph(dbl);
  CHECK(g2.vertices.size() == 2 * base.vertices.size());
  CHECK(g2.edges.size() == 2 * base.edges.size());
  CHECK(graph_iso(Multigraph::from_brauer_graph(g2), [&] {
          auto two = Multigraph::from_brauer_graph(base);
          const auto n = two.size();
          auto out = Multigraph::with_vertices(2 * n);
          for (std::size_t u = 0; u < n; ++u) {
            out.multiplicity[u] = out.multiplicity[u + n] = two.multiplicity[u];
            for (std::size_t v = 0; v < n; ++v) out.count[u][v] = out.count[u + n][v + n] = two.count[u][v];
          }
          return out;
        }()).has_value());
}

TEST_CASE("delete multiple edges, general construction") {
  const auto& b = *fixture("FIX-DOUBLE").brauer;
  const auto plan = delete_multiple_edges(b);
  CHECK(is_admissible(b, plan.weight));
  const auto g = smash_brauer(b, plan.weight).graph();
  CHECK(oracle::loop_count(g) == 0);
  CHECK(oracle::parallel_pairs(g) == 0);
  CHECK(post_check(DeletionKind::MultipleEdges, b, plan).ok());

  const auto simple = from_cycles({{"1+", "2+"}, {"1-"}, {"2-"}});
  const auto none = delete_multiple_edges(simple);
  CHECK(none.group.order() == 1);

  const auto pair = from_cycles({{"1+", "2+"}, {"1-", "2-"}});
  const auto p = delete_multiple_edges(pair);
  CHECK(p.group == GroupSpec::abelian({{"a1", 2}, {"a2", 2}}));
  const auto gp = smash_brauer(pair, p.weight).graph();
  CHECK(gp.edges.size() == 8);
  CHECK(oracle::loop_count(gp) == 0);
  CHECK(oracle::parallel_pairs(gp) == 0);
  CHECK(is_bipartite(gp));

  CHECK(error_of([&] { delete_multiple_edges(*fixture("FIX-LOOP").brauer); }) == ErrorCode::HasLoops);
}

TEST_CASE("delete multiple edges along a forest") {
  const auto& b = *fixture("FIX-DOUBLE").brauer;
  const auto plan = delete_multiple_edges_tree(b);
  CHECK(plan.group == GroupSpec::cyclic(2));
  for (const auto& e : {"1-", "2-", "3-", "4-"}) CHECK(w_of(plan, e) == "a");
  for (const auto& e : {"1+", "2+", "3+", "4+"}) CHECK(w_of(plan, e) == "1");
  CHECK(plan.weight == *fixture("FIX-DOUBLE").weight);
  const auto g = smash_brauer(b, plan.weight).graph();
  CHECK(g.vertices.size() == 6);
  CHECK(g.edges.size() == 8);
  CHECK(oracle::loop_count(g) == 0);
  CHECK(oracle::parallel_pairs(g) == 0);
  CHECK(graph_iso(Multigraph::from_brauer_graph(g), oracle::complete_bipartite(2, 4)).has_value());

  CHECK(delete_multiple_edges_tree(from_cycles({{"1+"}, {"1-"}})).group.order() == 1);

  const auto square = from_cycles({{"1+", "2+", "7-", "8-"},
                                   {"1-", "2-", "3+", "4+"},
                                   {"3-", "4-", "5+", "6+"},
                                   {"5-", "6-", "7+", "8+"}});
  CHECK(error_of([&] { delete_multiple_edges_tree(square); }) == ErrorCode::DeltaNotForest);
  CHECK(error_of([&] { delete_multiple_edges_tree(*fixture("FIX1").brauer); }) == ErrorCode::HasLoops);
}

TEST_CASE("delete cycles, general construction") {
  const auto& b = *fixture("FIX-CYCLE").brauer;
  const auto plan = delete_cycles(b);
  CHECK(plan.group.factors().size() == 3);
  for (const auto& f : plan.group.factors()) CHECK(f.infinite());
  CHECK(is_admissible(b, plan.weight));
  for (int depth = 1; depth <= 5; ++depth) {
    const auto check = post_check(DeletionKind::Cycles, b, plan, depth);
    CHECK_MESSAGE(check.ok(), "depth " << depth);
    const auto bw = smash_brauer(b, plan.weight, depth);
    CHECK_FALSE(oracle::has_cycle(bw.graph()));
    for (std::size_t i = 0; i < bw.size(); ++i) CHECK(bw.multiplicity[i] == 1);
  }
  CHECK(window_is_forest(smash_brauer(b, plan.weight, 4).graph()));

  const auto tree = from_cycles({{"1+", "2+"}, {"1-"}, {"2-"}});
  const auto none = delete_cycles(tree);
  CHECK(none.group.order() == 1);
  CHECK(strip_layer(smash_brauer(tree, none.weight).to_brauer()) == tree);
}

TEST_CASE("the hand weight on the triangle unrolls it into a path") {
  const auto& f = fixture("FIX-CYCLE");
  CHECK(is_admissible(*f.brauer, *f.weight));
  for (int depth = 1; depth <= 5; ++depth) {
    const auto g = smash_brauer(*f.brauer, *f.weight, depth).graph();
    CHECK_FALSE(oracle::has_cycle(g));
    CHECK(window_is_forest(g));
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      std::size_t degree = 0;
      for (const auto& e : g.edges) degree += (e.u == v) + (e.v == v);
      CHECK(degree <= 2);
    }
  }
}

TEST_CASE("windowed coverings of Z-weights are monotone") {
  const auto& b = *fixture("FIX-CYCLE").brauer;
  const auto plan = delete_cycles(b);
  for (int depth = 0; depth <= 3; ++depth) {
    const auto small = smash_brauer(b, plan.weight, depth);
    const auto large = smash_brauer(b, plan.weight, depth + 1);
    for (std::size_t i = 0; i < small.size(); ++i) {
      const auto j = large.find(small.half_edges[i].base, small.half_edges[i].g);
      REQUIRE(j.has_value());
      CHECK(large.names[large.sigma[*j]] == small.names[small.sigma[i]]);
      if (small.tau[i] != kNoHalfEdge) CHECK(large.names[large.tau[*j]] == small.names[small.tau[i]]);
    }
  }
}

TEST_CASE("representatives are least half edges") {
  const auto plan = delete_multiplicity(*fixture("FIX-MULT").brauer);
  REQUIRE(plan.representatives.size() == 2);
  CHECK(plan.representatives[0] == Representative{"1+", plan.representatives[0].role, 2});
  CHECK(plan.representatives[1].half_edge == "1-");
  CHECK(plan.representatives[1].order == 3);
  const auto tree = delete_multiple_edges_tree(*fixture("FIX-DOUBLE").brauer);
  REQUIRE(tree.representatives.size() == 2);
  CHECK(tree.representatives[0].half_edge == "1-");
  CHECK(tree.representatives[1].half_edge == "3-");
}

// Under W = a on both halves of every loop, the lift of a loop {e, tau e}
// stays a loop exactly when the sigma-arc from e up to tau e (e included,
// tau e excluded) holds an even number of loop half edges.
bool loops_survive(const BrauerPermutation& b) {
  std::vector<bool> on_loop(b.size(), false);
  for (HalfEdgeId e = 0; e < b.size(); ++e) on_loop[e] = b.vertex_of(e) == b.vertex_of(b.tau(e));
  for (HalfEdgeId e = 0; e < b.size(); ++e) {
    if (!on_loop[e]) continue;
    std::size_t count = 0;
    for (auto x = e; x != b.tau(e); x = b.sigma(x)) count += on_loop[x];
    if (count % 2 == 0) return true;
  }
  return false;
}

TEST_CASE("interleaved loops survive the loop deletion weight") {
  // One vertex, sigma = (1+ 2+ 1- 2-): between 1+ and 1- sits 2+, another loop half edge.
  const auto b = from_cycles({{"1+", "2+", "1-", "2-"}});
  const auto plan = delete_loops(b);
  CHECK(is_admissible(b, plan.weight));
  CHECK(loops_survive(b));
  const auto g = smash_brauer(b, plan.weight).graph();
  CHECK(oracle::loop_count(g) == 4);
  const auto check = post_check(DeletionKind::Loops, b, plan);
  CHECK_FALSE(check.ok());
  CHECK_FALSE(check.conditions.front().witness.empty());
}

TEST_CASE("a vertex on two cycles can keep a cycle under the cycle deletion weight") {
  // Two loops at one vertex: sigma = (1+ 3- 3+ 1- 2-), a pendant edge 2.
  const auto b = from_cycles({{"1+", "3-", "3+", "1-", "2-"}, {"2+"}});
  const auto plan = delete_cycles(b);
  CHECK(is_admissible(b, plan.weight));
  const auto window = smash_brauer(b, plan.weight, 3).graph();
  CHECK(oracle::has_cycle(window));
  CHECK_FALSE(post_check(DeletionKind::Cycles, b, plan, 3).ok());
}

TEST_CASE("random plans are admissible and behave as predicted") {
  oracle::Rng rng(oracle::seed_from_env(19));
  std::uniform_int_distribution<int> edges(1, 4);
  std::size_t multi_runs = 0, simple_cycle_runs = 0, surviving_loops = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto b = random_brauer(rng, edges(rng), 4);

    const auto pm = delete_multiplicity(b);
    CHECK(is_admissible(b, pm.weight));
    CHECK(smash_brauer(b, pm.weight).to_brauer().multiplicity_trivial());
    CHECK(post_check(DeletionKind::Multiplicity, b, pm).ok());

    const auto pl = delete_loops(b);
    CHECK(is_admissible(b, pl.weight));
    const auto bl = smash_brauer(b, pl.weight).to_brauer();
    const auto gl = brauer_graph(bl);
    const bool survive = loops_survive(b);
    surviving_loops += survive;
    CHECK((oracle::loop_count(gl) > 0) == survive);
    CHECK(post_check(DeletionKind::Loops, b, pl).ok() == (!survive && (!b.multiplicity_trivial() || bl.multiplicity_trivial())));
    if (b.multiplicity_trivial()) CHECK(bl.multiplicity_trivial());

    if (!survive && bl.size() <= 16) {
      ++multi_runs;
      const auto pe = delete_multiple_edges(bl);
      CHECK(is_admissible(bl, pe.weight));
      const auto ge = smash_brauer(bl, pe.weight).graph();
      CHECK(oracle::loop_count(ge) == 0);
      CHECK(oracle::parallel_pairs(ge) == 0);
    }

    if (b.size() <= 6) {
      const auto pc = delete_cycles(b);
      CHECK(is_admissible(b, pc.weight));
      const auto gc = smash_brauer(b, pc.weight, 2).graph();
      const auto check = post_check(DeletionKind::Cycles, b, pc, 2);
      CHECK(check.conditions.front().ok == !oracle::has_cycle(gc));
      // Every vertex of degree at most two and no loops: the graph is a union
      // of paths and polygons, where the construction unrolls each polygon.
      const auto base = brauer_graph(b);
      bool thin = oracle::loop_count(base) == 0;
      for (const auto& v : base.vertices) thin = thin && v.cycle.size() <= 2;
      if (thin) {
        ++simple_cycle_runs;
        CHECK_FALSE(oracle::has_cycle(gc));
      }
    }
  }
  CHECK(multi_runs > 20);
  CHECK(simple_cycle_runs > 5);
  CHECK(surviving_loops > 0);
}
