#include "brauer_cover/iso.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <tuple>

#include "brauer_cover/error.hpp"

namespace brauer_cover {

RibbonIsomorphism RibbonIsomorphism::inverse() const {
  RibbonIsomorphism out{std::vector<HalfEdgeId>(image.size())};
  for (std::size_t e = 0; e < image.size(); ++e) out.image[image[e]] = e;
  return out;
}

RibbonIsomorphism RibbonIsomorphism::then(const RibbonIsomorphism& other) const {
  RibbonIsomorphism out{std::vector<HalfEdgeId>(image.size())};
  for (std::size_t e = 0; e < image.size(); ++e) out.image[e] = other.image[image[e]];
  return out;
}

bool is_ribbon_isomorphism(const BrauerPermutation& b1, const BrauerPermutation& b2, const RibbonIsomorphism& phi) {
  if (b1.size() != b2.size() || phi.image.size() != b1.size()) return false;
  std::vector<bool> hit(b2.size(), false);
  for (HalfEdgeId e = 0; e < b1.size(); ++e) {
    const auto f = phi.image[e];
    if (f >= b2.size() || hit[f]) return false;
    hit[f] = true;
    if (phi.image[b1.sigma(e)] != b2.sigma(f) || phi.image[b1.tau(e)] != b2.tau(f)) return false;
    if (b1.multiplicity(e) != b2.multiplicity(f)) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<HalfEdgeId>> components(const BrauerPermutation& b) {
  std::vector<bool> seen(b.size(), false);
  std::vector<std::vector<HalfEdgeId>> out;
  for (HalfEdgeId start = 0; start < b.size(); ++start) {
    if (seen[start]) continue;
    std::vector<HalfEdgeId> comp{start};
    seen[start] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (auto next : {b.sigma(comp[i]), b.tau(comp[i])}) {
        if (!seen[next]) {
          seen[next] = true;
          comp.push_back(next);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Extends phi from start -> candidate over the component of start; on
// failure phi and used are left untouched.
bool propagate(const BrauerPermutation& b1, const BrauerPermutation& b2, HalfEdgeId start, HalfEdgeId candidate,
               std::vector<HalfEdgeId>& phi, std::vector<bool>& used) {
  std::vector<HalfEdgeId> assigned;
  auto rollback = [&] {
    for (auto e : assigned) {
      used[phi[e]] = false;
      phi[e] = kNoHalfEdge;
    }
    return false;
  };
  auto assign = [&](HalfEdgeId e, HalfEdgeId f) {
    if (phi[e] != kNoHalfEdge) return phi[e] == f;
    if (used[f] || b1.multiplicity(e) != b2.multiplicity(f)) return false;
    phi[e] = f;
    used[f] = true;
    assigned.push_back(e);
    return true;
  };
  if (!assign(start, candidate)) return rollback();
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    const auto e = assigned[i];
    if (!assign(b1.sigma(e), b2.sigma(phi[e])) || !assign(b1.tau(e), b2.tau(phi[e]))) return rollback();
  }
  return true;
}

}  // namespace

std::optional<RibbonIsomorphism> ribbon_iso(const BrauerPermutation& b1, const BrauerPermutation& b2) {
  if (b1.size() != b2.size()) return std::nullopt;
  std::vector<HalfEdgeId> phi(b1.size(), kNoHalfEdge);
  std::vector<bool> used(b2.size(), false);
  // Isomorphism of components is an equivalence relation, so taking the
  // first matching candidate never blocks a later component.
  for (const auto& comp : components(b1)) {
    bool matched = false;
    for (HalfEdgeId c = 0; c < b2.size() && !matched; ++c) {
      if (!used[c]) matched = propagate(b1, b2, comp.front(), c, phi, used);
    }
    if (!matched) return std::nullopt;
  }
  return RibbonIsomorphism{std::move(phi)};
}

Multigraph Multigraph::with_vertices(std::size_t n) {
  return Multigraph{std::vector<std::int64_t>(n, 1), std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
}

Multigraph Multigraph::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  auto g = with_vertices(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Multigraph Multigraph::from_brauer_graph(const BrauerGraph& graph) {
  auto g = with_vertices(graph.vertices.size());
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) g.multiplicity[v] = graph.vertices[v].multiplicity;
  for (const auto& e : graph.edges) g.add_edge(e.u, e.v);
  return g;
}

void Multigraph::add_edge(std::size_t u, std::size_t v) {
  ++count[u][v];
  if (u != v) ++count[v][u];
}

std::size_t Multigraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = u; v < size(); ++v) total += static_cast<std::size_t>(count[u][v]);
  }
  return total;
}

std::size_t Multigraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < size(); ++u) d += static_cast<std::size_t>(count[v][u]) * (u == v ? 2 : 1);
  return d;
}

std::optional<std::vector<std::size_t>> graph_iso(const Multigraph& g1, const Multigraph& g2) {
  for (const auto* g : {&g1, &g2}) {
    if (g->size() > kGraphIsoMaxVertices) {
      throw Error(ErrorCode::TooLarge, "graph isomorphism is limited to " + std::to_string(kGraphIsoMaxVertices) +
                                           " vertices", std::to_string(g->size()));
    }
  }
  const auto n = g1.size();
  if (n != g2.size() || g1.edge_count() != g2.edge_count()) return std::nullopt;

  auto signature = [](const Multigraph& g, std::size_t v) {
    std::vector<int> row = g.count[v];
    std::sort(row.begin(), row.end());
    return std::tuple{g.degree(v), g.count[v][v], g.multiplicity[v], row};
  };
  std::vector<decltype(signature(g1, 0))> sig1, sig2;
  for (std::size_t v = 0; v < n; ++v) {
    sig1.push_back(signature(g1, v));
    sig2.push_back(signature(g2, v));
  }
  {
    auto a = sig1, b = sig2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Most constrained first: high degree, then index.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return g1.degree(x) > g1.degree(y); });

  std::vector<std::size_t> map(n, kNoHalfEdge);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const auto u = order[depth];
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sig1[u] != sig2[c]) continue;
      bool fits = true;
      for (std::size_t k = 0; k < depth && fits; ++k) {
        const auto w = order[k];
        fits = g1.count[u][w] == g2.count[c][map[w]];
      }
      if (!fits) continue;
      map[u] = c;
      used[c] = true;
      if (self(self, depth + 1)) return true;
      used[c] = false;
      map[u] = kNoHalfEdge;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

std::optional<std::vector<std::size_t>> graph_iso(const BrauerGraph& g1, const BrauerGraph& g2) {
  return graph_iso(Multigraph::from_brauer_graph(g1), Multigraph::from_brauer_graph(g2));
}

}  // namespace brauer_cover
