#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brauer_cover {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Arrow indices in application order: {a1, a2, a3} is the path a3·a2·a1.
using Path = std::vector<std::size_t>;

struct RelationTerm {
  std::int64_t coefficient = 1;
  Path path;

  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

/// A relation generator sum_i k_i mu_i over parallel paths.
struct RelationGenerator {
  std::vector<RelationTerm> terms;

  friend bool operator==(const RelationGenerator&, const RelationGenerator&) = default;
};

/// A finite quiver with named vertices and arrows, together with an explicit
/// list of relation generators.
class BoundQuiver {
 public:
  /// Throws Error(InvalidQuiver) on duplicate names.
  std::size_t add_vertex(std::string name);
  std::size_t add_arrow(std::string name, std::size_t source, std::size_t target);
  std::size_t add_arrow(std::string name, std::string_view source, std::string_view target);
  /// Throws Error(InvalidQuiver) unless every path is nonempty and composable,
  /// all paths are parallel, and no coefficient is zero.
  std::size_t add_relation(RelationGenerator relation);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<RelationGenerator>& relations() const { return relations_; }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_arrow(std::string_view name) const;
  std::size_t vertex_index(std::string_view name) const;
  /// Throws Error(UnknownArrow).
  std::size_t arrow_index(std::string_view name) const;

  bool is_composable(std::span<const std::size_t> path) const;
  std::size_t path_source(std::span<const std::size_t> path) const;
  std::size_t path_target(std::span<const std::size_t> path) const;

  /// Outgoing / incoming arrow indices of a vertex, in arrow order.
  std::vector<std::size_t> out_arrows(std::size_t vertex) const;
  std::vector<std::size_t> in_arrows(std::size_t vertex) const;

  /// Right-to-left display, e.g. "alpha[2+]*alpha[1-]*alpha[1+]".
  std::string format_path(std::span<const std::size_t> path) const;
  std::string format_relation(const RelationGenerator& relation) const;

  friend bool operator==(const BoundQuiver& a, const BoundQuiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_ && a.relations_ == b.relations_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<RelationGenerator> relations_;
  std::map<std::string, std::size_t, std::less<>> vertex_index_;
  std::map<std::string, std::size_t, std::less<>> arrow_index_;
};

/// Relation generator with terms sorted by path and the sign fixed so the
/// first coefficient is positive. Two generators spanning the same line
/// normalize to the same value.
RelationGenerator normalize_relation(RelationGenerator relation);

}  // namespace brauer_cover
