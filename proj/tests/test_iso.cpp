#include <doctest.h>

#include <numeric>

#include "brauer_cover/error.hpp"
#include "brauer_cover/fixtures.hpp"
#include "brauer_cover/iso.hpp"
#include "brauer_cover/smash.hpp"
#include "support.hpp"

using namespace brauer_cover;

namespace {

const Fixture& fixture(std::string_view id) { return *find_fixture(id); }

/// The covering of FIX-MULT as drawn: p0..p5 around two hexagon-halves
/// (sigma p_i = p_{i+3}), q0..q5 around three (sigma q_i = q_{i+2}), tau p_i = q_i.
BrauerPermutation drawn_mult_cover() {
  std::vector<std::string> names;
  std::vector<HalfEdgeId> sigma(12), tau(12);
  for (int i = 0; i < 6; ++i) names.push_back("p" + std::to_string(i));
  for (int i = 0; i < 6; ++i) names.push_back("q" + std::to_string(i));
  for (std::size_t i = 0; i < 6; ++i) {
    sigma[i] = (i + 3) % 6;
    sigma[6 + i] = 6 + (i + 2) % 6;
    tau[i] = 6 + i;
    tau[6 + i] = i;
  }
  const std::vector<std::int64_t> mult(12, 1);
  return BrauerPermutation::from_arrays(names, sigma, tau, mult);
}

}  // namespace

TEST_CASE("ribbon iso of a permutation with itself is the identity") {
  for (const auto& f : fixtures()) {
    if (!f.brauer) continue;
    const auto phi = ribbon_iso(*f.brauer, *f.brauer);
    REQUIRE(phi.has_value());
    std::vector<HalfEdgeId> id(f.brauer->size());
    std::iota(id.begin(), id.end(), 0);
    CHECK(phi->image == id);
  }
}

TEST_CASE("ribbon iso recovers a renaming") {
  const auto& b = *fixture("FIX1").brauer;
  const auto renamed = oracle::relabel(b, [](const std::string& s) { return "h" + s; });
  const auto phi = ribbon_iso(b, renamed);
  REQUIRE(phi.has_value());
  CHECK(is_ribbon_isomorphism(b, renamed, *phi));
  // FIX1 has no nontrivial automorphism, so the renaming is the only answer.
  for (HalfEdgeId e = 0; e < b.size(); ++e) CHECK(renamed.name(phi->image[e]) == "h" + b.name(e));
}

TEST_CASE("the covering of FIX-MULT matches the drawn one") {
  const auto& f = fixture("FIX-MULT");
  const auto bw = smash_brauer(*f.brauer, *f.weight).to_brauer();
  const auto drawn = drawn_mult_cover();
  const auto phi = ribbon_iso(bw, drawn);
  REQUIRE(phi.has_value());
  CHECK(is_ribbon_isomorphism(bw, drawn, *phi));
  CHECK(graph_iso(Multigraph::from_brauer_graph(brauer_graph(bw)), oracle::complete_bipartite(2, 3)).has_value());
}

TEST_CASE("graph iso on drawn graphs") {
  const auto triangle = Multigraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto path = Multigraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(graph_iso(triangle, path).has_value());
  const auto path3 = Multigraph::from_edges(3, {{0, 1}, {1, 2}, {0, 1}});
  CHECK_FALSE(graph_iso(triangle, path3).has_value());

  // 4-cycle with doubled opposite sides.
  const auto drawn = Multigraph::from_edges(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {3, 0}});
  const auto& f = fixture("FIX-LOOP");
  const auto cover = Multigraph::from_brauer_graph(smash_brauer(*f.brauer, *f.weight).graph());
  const auto iso = graph_iso(cover, drawn);
  REQUIRE(iso.has_value());
  for (std::size_t u = 0; u < 4; ++u) {
    for (std::size_t v = 0; v < 4; ++v) CHECK(cover.count[u][v] == drawn.count[(*iso)[u]][(*iso)[v]]);
  }
  const auto wrong = Multigraph::from_edges(4, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_FALSE(graph_iso(cover, wrong).has_value());

  auto heavy = triangle;
  heavy.multiplicity[0] = 2;
  CHECK_FALSE(graph_iso(triangle, heavy).has_value());

  CHECK_THROWS_AS(graph_iso(Multigraph::with_vertices(kGraphIsoMaxVertices + 1),
                            Multigraph::with_vertices(kGraphIsoMaxVertices + 1)),
                  Error);
}

TEST_CASE("ribbon iso distinguishes cyclic orders and multiplicities") {
  // Same graph (one vertex of degree 4 on two loops), different rotation systems.
  BrauerPermutationData nested;
  nested.half_edges = {"1+", "1-", "2+", "2-"};
  nested.sigma = {{"1+", "1-"}, {"1-", "2+"}, {"2+", "2-"}, {"2-", "1+"}};
  nested.tau = {{"1+", "1-"}, {"1-", "1+"}, {"2+", "2-"}, {"2-", "2+"}};
  nested.multiplicity = {{"1+", 1}};
  auto crossed = nested;
  crossed.sigma = {{"1+", "2+"}, {"2+", "1-"}, {"1-", "2-"}, {"2-", "1+"}};
  const auto a = BrauerPermutation::from_data(nested);
  const auto b = BrauerPermutation::from_data(crossed);
  CHECK_FALSE(ribbon_iso(a, b).has_value());
  CHECK(graph_iso(brauer_graph(a), brauer_graph(b)).has_value());

  auto heavier = nested;
  heavier.multiplicity = {{"1+", 2}};
  CHECK_FALSE(ribbon_iso(a, BrauerPermutation::from_data(heavier)).has_value());
}

TEST_CASE("ribbon iso is an equivalence and implies graph iso") {
  oracle::Rng rng(oracle::seed_from_env(23));
  std::uniform_int_distribution<int> edges(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_brauer(rng, edges(rng), 2);
    const auto y = oracle::shuffle_names(rng, x);
    const auto z = oracle::shuffle_names(rng, y);

    const auto xx = ribbon_iso(x, x);
    const auto xy = ribbon_iso(x, y);
    const auto yz = ribbon_iso(y, z);
    REQUIRE(xx.has_value());
    REQUIRE(xy.has_value());
    REQUIRE(yz.has_value());
    CHECK(is_ribbon_isomorphism(x, y, *xy));
    CHECK(is_ribbon_isomorphism(y, x, xy->inverse()));
    CHECK(is_ribbon_isomorphism(x, z, xy->then(*yz)));
    CHECK(ribbon_iso(z, x).has_value());
    CHECK(graph_iso(brauer_graph(x), brauer_graph(y)).has_value());

    const auto other = random_brauer(rng, edges(rng), 2);
    if (ribbon_iso(x, other)) CHECK(graph_iso(brauer_graph(x), brauer_graph(other)).has_value());
  }
}

TEST_CASE("right translation of layers is an automorphism of B_W") {
  oracle::Rng rng(oracle::seed_from_env(29));
  std::uniform_int_distribution<int> edges(1, 4);
  auto groups = oracle::small_groups();
  groups.push_back(oracle::s3());
  for (int trial = 0; trial < 60; ++trial) {
    const auto& g = groups[static_cast<std::size_t>(trial) % groups.size()];
    const auto b = random_brauer(rng, edges(rng), 2);
    const auto w = *random_admissible_weight(rng, b, g);
    const auto bw = smash_brauer(b, w);
    const auto bb = bw.to_brauer();
    for (const auto& c : g.enumerate()) {
      RibbonIsomorphism phi;
      for (std::size_t i = 0; i < bw.size(); ++i) {
        const auto& h = bw.half_edges[i];
        const auto j = bw.find(h.base, g.multiply(h.g, c));
        REQUIRE(j.has_value());
        phi.image.push_back(bb.at(bw.names[*j]));
      }
      std::vector<HalfEdgeId> reindexed(bb.size());
      for (std::size_t i = 0; i < bw.size(); ++i) reindexed[bb.at(bw.names[i])] = phi.image[i];
      CHECK(is_ribbon_isomorphism(bb, bb, RibbonIsomorphism{reindexed}));
    }
  }
}
