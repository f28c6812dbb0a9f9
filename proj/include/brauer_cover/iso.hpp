#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "brauer_cover/brauer.hpp"

namespace brauer_cover {

/// phi: E1 -> E2 with phi sigma1 = sigma2 phi, phi tau1 = tau2 phi and
/// matching multiplicities. `image[e]` is the id of phi(e) in the second
/// permutation.
struct RibbonIsomorphism {
  std::vector<HalfEdgeId> image;

  RibbonIsomorphism inverse() const;
  /// (other o this): first this, then other.
  RibbonIsomorphism then(const RibbonIsomorphism& other) const;
};

bool is_ribbon_isomorphism(const BrauerPermutation& b1, const BrauerPermutation& b2, const RibbonIsomorphism& phi);

/// Exact search: each <sigma, tau>-component is matched by trying every
/// image of its least half edge and propagating along sigma and tau.
std::optional<RibbonIsomorphism> ribbon_iso(const BrauerPermutation& b1, const BrauerPermutation& b2);

/// Undirected multigraph with vertex multiplicities. `count[u][v]` is the
/// number of edges between u and v (loops on the diagonal).
struct Multigraph {
  std::vector<std::int64_t> multiplicity;
  std::vector<std::vector<int>> count;

  static Multigraph with_vertices(std::size_t n);
  static Multigraph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  /// Dangling half edges are ignored.
  static Multigraph from_brauer_graph(const BrauerGraph& graph);

  void add_edge(std::size_t u, std::size_t v);
  std::size_t size() const { return multiplicity.size(); }
  std::size_t edge_count() const;
  std::size_t degree(std::size_t v) const;  // loops count twice
};

inline constexpr std::size_t kGraphIsoMaxVertices = 14;

/// Vertex bijection preserving multiplicities and edge counts, or nullopt.
/// Throws Error(TooLarge) beyond kGraphIsoMaxVertices vertices.
std::optional<std::vector<std::size_t>> graph_iso(const Multigraph& g1, const Multigraph& g2);
std::optional<std::vector<std::size_t>> graph_iso(const BrauerGraph& g1, const BrauerGraph& g2);

}  // namespace brauer_cover
