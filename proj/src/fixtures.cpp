#include "brauer_cover/fixtures.hpp"

#include <algorithm>
#include <map>

namespace brauer_cover {

namespace {

BrauerPermutation make(std::vector<std::vector<std::string>> sigma_cycles,
                       std::map<std::string, std::int64_t> multiplicity = {}) {
  BrauerPermutationData data;
  for (const auto& cycle : sigma_cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      data.half_edges.push_back(cycle[i]);
      data.sigma[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    data.multiplicity[cycle.front()] = 1;
  }
  // Half edges are named "<edge><+|->"; tau swaps the sign.
  for (const auto& e : data.half_edges) {
    auto f = e;
    f.back() = e.back() == '+' ? '-' : '+';
    data.tau[e] = f;
  }
  for (const auto& [e, m] : multiplicity) {
    for (const auto& cycle : sigma_cycles) {
      if (std::find(cycle.begin(), cycle.end(), e) != cycle.end()) {
        data.multiplicity.erase(cycle.front());
        data.multiplicity[e] = m;
      }
    }
  }
  return BrauerPermutation::from_data(data);
}

GroupSpec symmetric3() {
  return GroupSpec::permutation(3, {{"a", {1, 2, 0}}, {"b", {1, 0, 2}}});
}

BoundQuiver br1_quiver() {
  BoundQuiver q;
  for (auto v : {"1", "2", "3"}) q.add_vertex(v);
  const auto a1 = q.add_arrow("alpha1", "1", "2");
  const auto a2 = q.add_arrow("alpha2", "2", "1");
  const auto b1 = q.add_arrow("beta1", "1", "3");
  const auto b2 = q.add_arrow("beta2", "3", "1");
  q.add_relation({{{1, {a1, a2}}, {-1, {b1, b2}}}});
  q.add_relation({{{1, {a2, b1}}}});
  q.add_relation({{{1, {b2, a1}}}});
  q.add_relation({{{1, {a2, a1, a2}}}});
  q.add_relation({{{1, {b2, b1, b2}}}});
  return q;
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;

  const auto fix1 = make({{"1+", "1-", "2+"}, {"2-"}}, {{"2-", 2}});
  out.push_back(Fixture{
      "FIX1",
      "two vertices, a loop and an edge to a vertex of multiplicity 2",
      fix1,
      std::nullopt,
      std::nullopt,
      FixtureSummary{.vertices = 2,
                     .edges = 2,
                     .has_loops = true,
                     .multiplicity_trivial = false,
                     .shape = "a loop at [1+ 1- 2+] and an edge to [2-] (2)"},
  });

  const auto mult = make({{"1+"}, {"1-"}}, {{"1+", 2}, {"1-", 3}});
  out.push_back(Fixture{
      "FIX-MULT",
      "one edge between vertices of multiplicity 2 and 3",
      mult,
      std::nullopt,
      GWeight::from_words(GroupSpec::cyclic(6), mult.names(), {{"1+", "a^3"}, {"1-", "a^2"}}),
      FixtureSummary{.vertices = 2,
                     .edges = 1,
                     .multiplicity_trivial = false,
                     .deletion = DeletionKind::Multiplicity,
                     .cover_half_edges = 12,
                     .cover_vertices = 5,
                     .cover_edges = 6,
                     .shape = "complete bipartite K(2,3), trivial multiplicity"},
  });

  const auto loop = make({{"1+", "1-", "2+"}, {"2-", "3-", "3+"}});
  out.push_back(Fixture{
      "FIX-LOOP",
      "two vertices, each with a loop, joined by one edge",
      loop,
      std::nullopt,
      GWeight::from_words(GroupSpec::cyclic(2), loop.names(), {{"1+", "a"}, {"1-", "a"}, {"3+", "a"}, {"3-", "a"}}),
      FixtureSummary{.vertices = 2,
                     .edges = 3,
                     .has_loops = true,
                     .deletion = DeletionKind::Loops,
                     .cover_half_edges = 12,
                     .cover_vertices = 4,
                     .cover_edges = 6,
                     .shape = "4-cycle with two doubled edges, no loops"},
  });

  const auto dbl = make({{"1+", "2+", "3+", "4+"}, {"1-", "2-"}, {"3-", "4-"}});
  out.push_back(Fixture{
      "FIX-DOUBLE",
      "a path of two double edges",
      dbl,
      std::nullopt,
      GWeight::from_words(GroupSpec::cyclic(2), dbl.names(), {{"1-", "a"}, {"2-", "a"}, {"3-", "a"}, {"4-", "a"}}),
      FixtureSummary{.vertices = 3,
                     .edges = 4,
                     .has_multiple_edges = true,
                     .deletion = DeletionKind::MultipleEdgesTree,
                     .cover_half_edges = 16,
                     .cover_vertices = 6,
                     .cover_edges = 8,
                     .shape = "simple bipartite graph, 6 vertices and 8 edges"},
  });

  out.push_back(Fixture{
      "FIX-S3",
      "FIX1 with a weight in the symmetric group S3",
      fix1,
      std::nullopt,
      GWeight::from_words(symmetric3(), fix1.names(), {{"1+", "a"}, {"1-", "a"}, {"2+", "a"}, {"2-", "b"}}),
      FixtureSummary{.vertices = 2,
                     .edges = 2,
                     .has_loops = true,
                     .multiplicity_trivial = false,
                     .cover_half_edges = 24,
                     .cover_vertices = 9,
                     .cover_edges = 12,
                     .shape = "six 3-cycles and three 2-cycles, trivial multiplicity"},
  });

  const auto cycle = make({{"1+", "3+"}, {"1-", "2-"}, {"3-", "2+"}});
  out.push_back(Fixture{
      "FIX-CYCLE",
      "a triangle",
      cycle,
      std::nullopt,
      GWeight::from_words(GroupSpec::cyclic(kInfiniteOrder), cycle.names(), {{"1-", "a^-1"}, {"2-", "a"}}),
      FixtureSummary{.vertices = 3,
                     .edges = 3,
                     .window_depth = 2,
                     .cover_half_edges = 16,
                     .cover_vertices = 8,
                     .cover_edges = 7,
                     .shape = "infinite path, edges labelled 1, 3, 2 in turn"},
  });

  const auto br1 = br1_quiver();
  out.push_back(Fixture{
      "FIX-BR1",
      "two 2-cycles through vertex 1 with one commutativity relation",
      std::nullopt,
      br1,
      GWeight::from_words(GroupSpec::cyclic(kInfiniteOrder), [&] {
        std::vector<std::string> names;
        for (const auto& a : br1.arrows()) names.push_back(a.name);
        return names;
      }(), {{"alpha2", "a"}, {"beta2", "a"}}),
      FixtureSummary{.vertices = 3,
                     .edges = 4,
                     .relations = 5,
                     .window = {"a^-1", "1", "a"},
                     .cover_vertices = 9,
                     .cover_edges = 12,
                     .shape = "three layers; alpha1, beta1 inside a layer, alpha2, beta2 to the next"},
  });
  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> registry = build();
  return registry;
}

const Fixture* find_fixture(std::string_view id) {
  for (const auto& f : fixtures()) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

}  // namespace brauer_cover
