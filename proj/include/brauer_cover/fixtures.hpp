#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brauer_cover/brauer.hpp"
#include "brauer_cover/deletions.hpp"
#include "brauer_cover/groups.hpp"
#include "brauer_cover/quiver.hpp"
#include "brauer_cover/weights.hpp"

namespace brauer_cover {

/// Expected shape of a fixture and of its covering under the shipped weight.
struct FixtureSummary {
  std::size_t vertices = 0;  // of Gamma(B), or of the quiver
  std::size_t edges = 0;     // of Gamma(B), or arrows of the quiver
  std::size_t relations = 0;  // quiver fixtures only
  bool has_loops = false;
  bool has_multiple_edges = false;
  bool multiplicity_trivial = true;

  std::optional<DeletionKind> deletion{};  // procedure the shipped weight comes from
  std::optional<int> window_depth{};     // infinite groups
  std::vector<std::string> window{};     // explicit layers for quiver fixtures
  std::size_t cover_half_edges = 0;      // Brauer fixtures
  std::size_t cover_vertices = 0;
  std::size_t cover_edges = 0;  // edges of Gamma(B_W), or arrows of Q_{G,W}
  std::string shape;
};

struct Fixture {
  std::string id;
  std::string description;
  std::optional<BrauerPermutation> brauer;
  std::optional<BoundQuiver> quiver;
  std::optional<GWeight> weight;
  FixtureSummary expected;
};

const std::vector<Fixture>& fixtures();
/// nullptr when the id is unknown.
const Fixture* find_fixture(std::string_view id);

}  // namespace brauer_cover
