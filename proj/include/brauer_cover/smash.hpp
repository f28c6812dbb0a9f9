#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauer_cover/brauer.hpp"
#include "brauer_cover/groups.hpp"
#include "brauer_cover/quiver.hpp"
#include "brauer_cover/weights.hpp"

namespace brauer_cover {

/// e_g = (e, g) in E_W = E x G.
struct CoveredHalfEdge {
  HalfEdgeId base = 0;
  GroupElement g;

  friend bool operator==(const CoveredHalfEdge&, const CoveredHalfEdge&) = default;
};

/// "e@word" naming for covered half edges, vertices and arrows.
std::string covered_name(const std::string& base, const GroupSpec& group, const GroupElement& g);

/// B_W, or a finite window of it when G is infinite.
///
/// Every sigma_W-orbit present is complete, so m_W is defined on all of it.
/// `tau[i]` is kNoHalfEdge exactly for frontier half edges, whose
/// tau_W-partner lies outside the window.
struct WindowedBrauerPermutation {
  GroupSpec group;
  std::vector<CoveredHalfEdge> half_edges;
  std::vector<std::string> names;
  std::vector<HalfEdgeId> sigma;
  std::vector<HalfEdgeId> tau;
  std::vector<std::int64_t> multiplicity;
  std::vector<std::size_t> frontier;  // sorted indices
  bool complete = true;
  std::optional<int> depth;  // set for windowed builds

  std::optional<std::size_t> find(HalfEdgeId base, const GroupElement& g) const;
  std::size_t size() const { return half_edges.size(); }
  /// The genuine Brauer permutation B_W. Throws Error(WindowRequired) when
  /// the window is not complete.
  BrauerPermutation to_brauer() const;
  BrauerGraph graph() const;
  /// Orbit sizes |<sigma_W> e_g| per half edge.
  std::vector<std::size_t> orbit_sizes() const;
};

/// Builds B_W = (E x G, sigma_W, tau_W, m_W) with
/// sigma_W(e_g) = sigma(e)_{W(e) g}, tau_W(e_g) = tau(e)_g and
/// m_W = m(<sigma>e) |<sigma>e| / |<sigma_W> e_g|.
///
/// For finite G the result is complete and `depth` is ignored. For infinite
/// G, `depth` rounds of tau_W-pairing are run after closing the seed layer
/// E x {1} under sigma_W; every round closes the new half edges under sigma_W.
///
/// Throws Error(NotAdmissible) with the witness half edge, or
/// Error(WindowRequired) when G is infinite and no depth is given.
WindowedBrauerPermutation smash_brauer(const BrauerPermutation& b, const GWeight& w,
                                       std::optional<int> depth = std::nullopt);

/// Admissibility decided from sigma_W-orbits: every <sigma_W> e_1 must close
/// within m n steps with m n / |<sigma_W> e_1| integral. Works for any total
/// weight, finite or infinite G.
bool admissibility_via_orbits(const BrauerPermutation& b, const GWeight& w);

/// (Q_{G,W}, I_{G,W}) with the covering F_{G,W} and the right G-action.
///
/// Vertex x^{(a)} is named "x@a", arrow alpha^{(a)}: x^{(a)} -> y^{(W(alpha) a)}
/// is named "alpha@a". With a window, arrows are lifted at every layer of the
/// window; targets outside the window become frontier vertices.
struct CoveringQuiver {
  BoundQuiver quiver;
  BoundQuiver base;
  GroupSpec group;
  std::vector<GroupElement> base_weights;  // per base arrow
  std::vector<GroupElement> layers;        // the window (all of G when finite)
  bool windowed = false;

  std::vector<std::size_t> vertex_base;
  std::vector<GroupElement> vertex_layer;
  std::vector<bool> vertex_frontier;
  std::vector<std::size_t> arrow_base;
  std::vector<GroupElement> arrow_layer;
  std::map<std::pair<std::size_t, GroupElement>, std::size_t> vertex_lookup;
  std::map<std::pair<std::size_t, GroupElement>, std::size_t> arrow_lookup;

  std::optional<std::size_t> find_vertex(std::size_t base_vertex, const GroupElement& layer) const;
  std::optional<std::size_t> find_arrow(std::size_t base_arrow, const GroupElement& layer) const;
  /// X_c: x^{(a)} -> x^{(ac)}; nullopt if the image is outside the window.
  std::optional<std::size_t> act_vertex(std::size_t v, const GroupElement& c) const;
  std::optional<std::size_t> act_arrow(std::size_t a, const GroupElement& c) const;
  /// Copy with one arrow removed (relations through it are dropped).
  CoveringQuiver without_arrow(std::size_t arrow) const;
};

/// Throws Error(NotHomogeneous) with the offending generator, or
/// Error(WindowRequired) when G is infinite and no window is given.
CoveringQuiver smash_quiver(const BoundQuiver& q, const GWeight& w,
                            std::optional<std::vector<GroupElement>> window = std::nullopt);

struct CoveringReport {
  bool surjective = true;
  bool morphism = true;  // F commutes with source and target
  bool out_bijective = true;
  bool in_bijective = true;
  bool action_free = true;
  bool action_admissible = true;
  bool orbit_quiver_isomorphic = true;
  std::size_t checked_vertices = 0;
  std::vector<std::string> failures;  // "<condition>: <witness>"

  bool ok() const { return failures.empty(); }
};

/// Checks that F_{G,W} is a Galois covering: surjective on vertices,
/// bijective on x+ and x- for every (interior) vertex, and the G-action is
/// free and admissible with orbit quiver isomorphic to the base. For
/// windows, only interior vertices (all incident lifts inside the window)
/// are checked and the action is tested on elements a^{-1}b of the window.
CoveringReport check_covering(const CoveringQuiver& cov);

struct CrossValidation {
  bool ok = true;
  std::string mismatch;
  std::size_t vertices_compared = 0;
  std::size_t arrows_compared = 0;
  std::size_t relations_compared = 0;
};

/// Compares bound_quiver(B_W) with smash_quiver(bound_quiver(B), W) under
/// (<tau>e)^{(g)} -> <tau_W> e_g and alpha_e^{(g)} -> alpha_{e_g}. Relations
/// are compared as normalized generators. For infinite G the comparison is
/// restricted to relations whose arrows all lie in the depth-`depth` window.
CrossValidation cross_validate_theorem(const BrauerPermutation& b, const GWeight& w,
                                       std::optional<int> depth = std::nullopt);

}  // namespace brauer_cover
