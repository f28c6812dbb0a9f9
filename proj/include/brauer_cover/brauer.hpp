#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brauer_cover/quiver.hpp"

namespace brauer_cover {

/// Index of a half edge. Half edges are stored sorted by name, so comparing
/// ids compares names lexicographically.
using HalfEdgeId = std::size_t;
inline constexpr HalfEdgeId kNoHalfEdge = std::numeric_limits<HalfEdgeId>::max();

/// Name-keyed form of a Brauer permutation, as read from JSON. May be invalid.
struct BrauerPermutationData {
  std::vector<std::string> half_edges;
  std::map<std::string, std::string> sigma;
  std::map<std::string, std::string> tau;
  /// One entry per sigma-orbit, keyed by any member of the orbit.
  std::map<std::string, std::int64_t> multiplicity;

  friend bool operator==(const BrauerPermutationData&, const BrauerPermutationData&) = default;
};

struct Violation {
  std::string kind;  // e.g. "tau not free"
  std::vector<std::string> half_edges;
  std::string message;
};

std::vector<Violation> validate(const BrauerPermutationData& data);

/// The quadruple (E, sigma, tau, m). Immutable once built; every instance
/// satisfies the invariants checked by validate().
class BrauerPermutation {
 public:
  /// Throws Error(InvalidBrauer) listing the first violation.
  static BrauerPermutation from_data(const BrauerPermutationData& data);
  /// Positional form; `multiplicity` is given per half edge and must be
  /// constant on sigma-orbits. Names are re-sorted.
  static BrauerPermutation from_arrays(std::vector<std::string> names, std::span<const HalfEdgeId> sigma,
                                       std::span<const HalfEdgeId> tau,
                                       std::span<const std::int64_t> multiplicity);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(HalfEdgeId e) const { return names_[e]; }
  std::optional<HalfEdgeId> find(std::string_view name) const;
  /// Throws Error(UnknownHalfEdge).
  HalfEdgeId at(std::string_view name) const;

  HalfEdgeId sigma(HalfEdgeId e) const { return sigma_[e]; }
  HalfEdgeId sigma_inverse(HalfEdgeId e) const { return sigma_inv_[e]; }
  HalfEdgeId tau(HalfEdgeId e) const { return tau_[e]; }
  std::span<const HalfEdgeId> sigma_array() const { return sigma_; }
  std::span<const HalfEdgeId> tau_array() const { return tau_; }

  /// m of the sigma-orbit containing e.
  std::int64_t multiplicity(HalfEdgeId e) const { return vertex_multiplicity_[vertex_of_[e]]; }
  /// n(e) = |<sigma> e|.
  std::size_t orbit_length(HalfEdgeId e) const { return vertices_[vertex_of_[e]].size(); }
  /// [e, sigma e, sigma^2 e, ...] of length n(e).
  std::vector<HalfEdgeId> sigma_orbit(HalfEdgeId e) const;

  /// Sigma-orbits, each starting at its least member, sorted by that member.
  const std::vector<std::vector<HalfEdgeId>>& vertices() const { return vertices_; }
  std::size_t vertex_of(HalfEdgeId e) const { return vertex_of_[e]; }
  std::int64_t vertex_multiplicity(std::size_t v) const { return vertex_multiplicity_[v]; }
  bool multiplicity_trivial() const;

  BrauerPermutationData to_data() const;

  friend bool operator==(const BrauerPermutation& a, const BrauerPermutation& b) {
    return a.names_ == b.names_ && a.sigma_ == b.sigma_ && a.tau_ == b.tau_ &&
           a.vertex_multiplicity_ == b.vertex_multiplicity_;
  }

 private:
  BrauerPermutation() = default;

  std::vector<std::string> names_;
  std::vector<HalfEdgeId> sigma_;
  std::vector<HalfEdgeId> sigma_inv_;
  std::vector<HalfEdgeId> tau_;
  std::vector<std::vector<HalfEdgeId>> vertices_;
  std::vector<std::size_t> vertex_of_;
  std::vector<std::int64_t> vertex_multiplicity_;
};

struct GraphVertex {
  std::string name;                // "[1+ 1- 2+]"
  std::vector<std::string> cycle;  // half edges in sigma order, least first
  std::int64_t multiplicity = 1;

  friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

struct GraphEdge {
  std::string name;  // "{1+,1-}"
  std::string first;  // lexicographically smaller half edge
  std::string second;
  std::size_t u = 0;  // vertex of `first`
  std::size_t v = 0;  // vertex of `second`

  bool is_loop() const { return u == v; }
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// A half edge whose tau-partner is outside a window.
struct DanglingHalfEdge {
  std::string half_edge;
  std::size_t vertex = 0;

  friend bool operator==(const DanglingHalfEdge&, const DanglingHalfEdge&) = default;
};

/// Gamma(B): vertices are sigma-orbits with their cyclic order, edges are
/// tau-orbits. Windowed coverings may also carry dangling half edges.
struct BrauerGraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  std::vector<DanglingHalfEdge> dangling;
  std::map<std::string, std::size_t, std::less<>> half_edge_vertex;

  std::size_t vertex_of(std::string_view half_edge) const;

  friend bool operator==(const BrauerGraph&, const BrauerGraph&) = default;
};

/// Builds the graph of a (possibly partial) ribbon structure. `tau[e]` may be
/// kNoHalfEdge, which yields a dangling half edge.
BrauerGraph make_brauer_graph(std::span<const std::string> names, std::span<const HalfEdgeId> sigma,
                              std::span<const HalfEdgeId> tau, std::span<const std::int64_t> multiplicity);

BrauerGraph brauer_graph(const BrauerPermutation& b);

/// Structural flags of a Brauer graph. Dangling half edges are ignored.
struct GraphClassification {
  bool has_loops = false;
  bool has_multiple_edges = false;  // loops excluded
  bool multiplicity_trivial = true;
  bool is_tree = false;
  bool is_connected = false;
  std::vector<std::size_t> cycle_vertices;  // sorted vertex indices
};

GraphClassification classify(const BrauerGraph& graph);

/// Names used by the bound Brauer quiver.
std::string quiver_vertex_name(const BrauerPermutation& b, HalfEdgeId e);  // "{e,tau e}"
std::string quiver_arrow_name(const BrauerPermutation& b, HalfEdgeId e);   // "alpha[e]"

/// The special cycle mu_e = alpha_{sigma^{n-1} e} ... alpha_{sigma e} alpha_e,
/// as half edges in application order.
std::vector<HalfEdgeId> special_cycle(const BrauerPermutation& b, HalfEdgeId e);

/// (Q(B), I(B)): one vertex per tau-orbit, one arrow alpha_e per half edge,
/// the |E| zero relations alpha_{tau sigma e} alpha_e (in half-edge order),
/// then one commutativity relation mu_e^{m} - mu_{tau e}^{m'} per tau-orbit
/// with +1 on the smaller half edge. Vertex i is the tau-orbit of the i-th
/// smallest edge; arrow i is alpha of half edge i.
BoundQuiver bound_quiver(const BrauerPermutation& b);

}  // namespace brauer_cover
