#include <doctest.h>

#include "brauer_cover/brauer.hpp"
#include "brauer_cover/error.hpp"
#include "brauer_cover/fixtures.hpp"
#include "brauer_cover/quiver.hpp"
#include "support.hpp"

using namespace brauer_cover;

namespace {

const BrauerPermutation& fixture(std::string_view id) { return *find_fixture(id)->brauer; }

BrauerPermutationData fix1_data() {
  BrauerPermutationData d;
  d.half_edges = {"1+", "1-", "2+", "2-"};
  d.sigma = {{"1+", "1-"}, {"1-", "2+"}, {"2+", "1+"}, {"2-", "2-"}};
  d.tau = {{"1+", "1-"}, {"1-", "1+"}, {"2+", "2-"}, {"2-", "2+"}};
  d.multiplicity = {{"1+", 1}, {"2-", 2}};
  return d;
}

BrauerPermutation one_edge() {
  BrauerPermutationData d;
  d.half_edges = {"e", "f"};
  d.sigma = {{"e", "e"}, {"f", "f"}};
  d.tau = {{"e", "f"}, {"f", "e"}};
  d.multiplicity = {{"e", 1}, {"f", 1}};
  return BrauerPermutation::from_data(d);
}

bool has_kind(const std::vector<Violation>& vs, const std::string& kind) {
  for (const auto& v : vs) {
    if (v.kind == kind) return true;
  }
  return false;
}

RelationGenerator relation(const BoundQuiver& q, std::vector<std::pair<std::int64_t, std::vector<std::string>>> terms) {
  RelationGenerator r;
  for (const auto& [k, names] : terms) {
    Path p;
    for (const auto& n : names) p.push_back(q.arrow_index("alpha[" + n + "]"));
    r.terms.push_back({k, p});
  }
  return r;
}

std::vector<std::string> names_of(const BrauerPermutation& b, const std::vector<HalfEdgeId>& ids) {
  std::vector<std::string> out;
  for (auto e : ids) out.push_back(b.name(e));
  return out;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(fix1_data()).empty());
  CHECK(BrauerPermutation::from_data(fix1_data()) == fixture("FIX1"));

  auto fixed = fix1_data();
  fixed.tau["1+"] = "1+";
  fixed.tau["1-"] = "1-";
  CHECK(has_kind(validate(fixed), "tau not free"));
  CHECK_THROWS_AS(BrauerPermutation::from_data(fixed), Error);

  auto missing = fix1_data();
  missing.multiplicity.erase("2-");
  CHECK(has_kind(validate(missing), "multiplicity missing"));

  auto twice = fix1_data();
  twice.multiplicity["1-"] = 1;
  CHECK(has_kind(validate(twice), "multiplicity duplicated"));

  auto broken = fix1_data();
  broken.sigma["2-"] = "1+";
  CHECK(has_kind(validate(broken), "sigma not bijective"));
}

TEST_CASE("sigma orbits") {
  const auto& b = fixture("FIX1");
  CHECK(names_of(b, b.sigma_orbit(b.at("1+"))) == std::vector<std::string>{"1+", "1-", "2+"});
  CHECK(b.orbit_length(b.at("1+")) == 3);
  CHECK(names_of(b, b.sigma_orbit(b.at("2-"))) == std::vector<std::string>{"2-"});
  CHECK(b.orbit_length(b.at("2-")) == 1);
  CHECK(b.multiplicity(b.at("2-")) == 2);
  const auto e = one_edge();
  CHECK(e.sigma_orbit(e.at("e")) == std::vector<HalfEdgeId>{e.at("e")});
  CHECK_THROWS_AS(b.at("9+"), Error);
}

TEST_CASE("Brauer graph of FIX1") {
  const auto g = brauer_graph(fixture("FIX1"));
  REQUIRE(g.vertices.size() == 2);
  REQUIRE(g.edges.size() == 2);
  CHECK(g.vertices[0].cycle == std::vector<std::string>{"1+", "1-", "2+"});
  CHECK(g.vertices[0].multiplicity == 1);
  CHECK(g.vertices[1].cycle == std::vector<std::string>{"2-"});
  CHECK(g.vertices[1].multiplicity == 2);
  CHECK(g.edges[0].is_loop());
  CHECK(g.edges[0].u == 0);
  CHECK_FALSE(g.edges[1].is_loop());
  CHECK(std::min(g.edges[1].u, g.edges[1].v) == 0);
  CHECK(std::max(g.edges[1].u, g.edges[1].v) == 1);
}

TEST_CASE("Brauer graph of one edge with trivial sigma") {
  const auto g = brauer_graph(one_edge());
  CHECK(g.vertices.size() == 2);
  REQUIRE(g.edges.size() == 1);
  CHECK_FALSE(g.edges[0].is_loop());
}

TEST_CASE("Brauer graph of FIX-LOOP") {
  const auto g = brauer_graph(fixture("FIX-LOOP"));
  REQUIRE(g.vertices.size() == 2);
  CHECK(g.vertices[0].name == "[1+ 1- 2+]");
  CHECK(g.vertices[1].name == "[2- 3- 3+]");
  REQUIRE(g.edges.size() == 3);
  CHECK(g.edges[0].is_loop());
  CHECK(g.edges[0].u == 0);
  CHECK_FALSE(g.edges[1].is_loop());
  CHECK(g.edges[2].is_loop());
  CHECK(g.edges[2].u == 1);
}

TEST_CASE("bound quiver of FIX1") {
  const auto& b = fixture("FIX1");
  const auto q = bound_quiver(b);
  CHECK(q.vertices() == std::vector<std::string>{"{1+,1-}", "{2+,2-}"});
  REQUIRE(q.arrows().size() == 4);
  CHECK(q.arrows()[q.arrow_index("alpha[1+]")].source == 0);
  CHECK(q.arrows()[q.arrow_index("alpha[1+]")].target == 0);
  CHECK(q.arrows()[q.arrow_index("alpha[1-]")].target == 1);
  CHECK(q.arrows()[q.arrow_index("alpha[2-]")].source == 1);
  CHECK(q.arrows()[q.arrow_index("alpha[2-]")].target == 1);

  const std::vector<RelationGenerator> expected{
      relation(q, {{1, {"1+", "1+"}}}),
      relation(q, {{1, {"1-", "2-"}}}),
      relation(q, {{1, {"2+", "1-"}}}),
      relation(q, {{1, {"2-", "2+"}}}),
      relation(q, {{1, {"1+", "1-", "2+"}}, {-1, {"1-", "2+", "1+"}}}),
      relation(q, {{1, {"2+", "1+", "1-"}}, {-1, {"2-", "2-"}}}),
  };
  CHECK(q.relations() == expected);
  CHECK(bound_quiver(fixture("FIX-S3")) == q);
}

TEST_CASE("bound quiver of one edge with trivial sigma") {
  // One tau-orbit, so a single vertex carrying both arrows as loops.
  const auto b = one_edge();
  const auto q = bound_quiver(b);
  CHECK(q.vertices() == std::vector<std::string>{"{e,f}"});
  REQUIRE(q.arrows().size() == 2);
  for (const auto& a : q.arrows()) {
    CHECK(a.source == 0);
    CHECK(a.target == 0);
  }
  const std::vector<RelationGenerator> expected{
      relation(q, {{1, {"e", "f"}}}),
      relation(q, {{1, {"f", "e"}}}),
      relation(q, {{1, {"e"}}, {-1, {"f"}}}),
  };
  CHECK(q.relations() == expected);
}

TEST_CASE("classify") {
  const auto fix1 = classify(brauer_graph(fixture("FIX1")));
  CHECK(fix1.has_loops);
  CHECK_FALSE(fix1.has_multiple_edges);
  CHECK_FALSE(fix1.multiplicity_trivial);
  CHECK(fix1.cycle_vertices == std::vector<std::size_t>{0});

  const auto tri = classify(brauer_graph(fixture("FIX-CYCLE")));
  CHECK_FALSE(tri.is_tree);
  CHECK(tri.is_connected);
  CHECK(tri.cycle_vertices == std::vector<std::size_t>{0, 1, 2});

  const auto single = classify(brauer_graph(one_edge()));
  CHECK(single.is_tree);
  CHECK_FALSE(single.has_loops);
  CHECK_FALSE(single.has_multiple_edges);

  const auto dbl = classify(brauer_graph(fixture("FIX-DOUBLE")));
  CHECK(dbl.has_multiple_edges);
  CHECK_FALSE(dbl.has_loops);
  CHECK(dbl.cycle_vertices == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("random Brauer permutations: graph, quiver and classification invariants") {
  oracle::Rng rng(oracle::seed_from_env(11));
  std::uniform_int_distribution<int> edges(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const auto b = random_brauer(rng, edges(rng), 3);
    const auto g = brauer_graph(b);

    std::size_t cycle_total = 0;
    for (const auto& v : g.vertices) cycle_total += v.cycle.size();
    CHECK(cycle_total == b.size());
    CHECK(2 * g.edges.size() == b.size());

    const auto q = bound_quiver(b);
    CHECK(q.arrows().size() == b.size());
    CHECK(q.vertices().size() == b.size() / 2);
    REQUIRE(q.relations().size() == b.size() + b.size() / 2);
    std::size_t zero = 0;
    for (const auto& r : q.relations()) {
      zero += r.terms.size() == 1;
      for (const auto& t : r.terms) {
        CHECK(q.is_composable(t.path));
        CHECK(q.path_source(t.path) == q.path_source(r.terms[0].path));
        CHECK(q.path_target(t.path) == q.path_target(r.terms[0].path));
      }
    }
    CHECK(zero == b.size());

    BrauerPermutationData rebuilt;
    for (const auto& v : g.vertices) {
      for (std::size_t i = 0; i < v.cycle.size(); ++i) {
        rebuilt.half_edges.push_back(v.cycle[i]);
        rebuilt.sigma[v.cycle[i]] = v.cycle[(i + 1) % v.cycle.size()];
      }
      rebuilt.multiplicity[v.cycle.front()] = v.multiplicity;
    }
    for (const auto& e : g.edges) {
      rebuilt.tau[e.first] = e.second;
      rebuilt.tau[e.second] = e.first;
    }
    CHECK(BrauerPermutation::from_data(rebuilt) == b);

    const auto c = classify(g);
    const auto expected = oracle::cycle_vertices(g.vertices.size(), oracle::edge_list(g));
    CHECK(std::vector<std::size_t>(expected.begin(), expected.end()) == c.cycle_vertices);
    CHECK(c.has_loops == (oracle::loop_count(g) > 0));
    CHECK(c.has_multiple_edges == (oracle::parallel_pairs(g) > 0));
    CHECK(c.multiplicity_trivial == b.multiplicity_trivial());
    CHECK(c.is_tree == (c.is_connected && g.edges.size() + 1 == g.vertices.size()));
    if (c.is_tree) CHECK(expected.empty());
  }
}
