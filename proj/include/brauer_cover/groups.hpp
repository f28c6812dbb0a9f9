#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brauer_cover {

/// Order value used for an infinite cyclic factor.
inline constexpr std::int64_t kInfiniteOrder = 0;

/// An element of a GroupSpec. For abelian products this is the exponent
/// vector (one coordinate per factor, reduced into [0, order) for finite
/// factors); for permutation groups it is the one-line image array.
/// Equality is structural, so elements can be hashed and ordered.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> data) : data_(std::move(data)) {}

  std::span<const std::int64_t> data() const { return data_; }
  std::size_t size() const { return data_.size(); }
  std::int64_t operator[](std::size_t i) const { return data_[i]; }

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<std::int64_t> data_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& x) const noexcept;
};

struct CyclicFactor {
  std::string name;
  std::int64_t order = kInfiniteOrder;  // kInfiniteOrder means Z

  bool infinite() const { return order == kInfiniteOrder; }
  friend bool operator==(const CyclicFactor&, const CyclicFactor&) = default;
};

struct PermGenerator {
  std::string name;
  std::vector<std::int64_t> image;  // i -> image[i]

  friend bool operator==(const PermGenerator&, const PermGenerator&) = default;
};

/// The coefficient group of a weight: either a direct product of cyclic
/// groups (finite or infinite) or the subgroup of S_degree generated by a
/// list of named permutations.
///
/// Products follow the "later factor on the left" convention: for
/// permutations, multiply(x, y) applies y first and then x.
class GroupSpec {
 public:
  enum class Kind { AbelianProduct, FinitePermutation };

  /// The trivial group.
  GroupSpec() = default;

  /// Throws Error(InvalidGroup) on duplicate/empty/reserved names or bad orders.
  static GroupSpec abelian(std::vector<CyclicFactor> factors);
  static GroupSpec permutation(std::int64_t degree, std::vector<PermGenerator> generators);
  /// The group with one element (abelian product with no factors).
  static GroupSpec trivial();
  /// Cyclic group of the given order, or Z for kInfiniteOrder.
  static GroupSpec cyclic(std::int64_t order, std::string generator = "a");

  Kind kind() const { return kind_; }
  const std::vector<CyclicFactor>& factors() const { return factors_; }
  std::int64_t degree() const { return degree_; }
  const std::vector<PermGenerator>& generators() const { return generators_; }
  /// Generator names in declaration order.
  std::vector<std::string> generator_names() const;

  bool is_finite() const;
  /// |G|, or nullopt for infinite groups.
  std::optional<std::size_t> order() const;

  GroupElement identity() const;
  GroupElement generator(std::string_view name) const;
  GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
  GroupElement inverse(const GroupElement& x) const;
  GroupElement power(const GroupElement& x, std::int64_t k) const;
  /// Least k >= 1 with x^k = 1; nullopt when x has infinite order.
  std::optional<std::int64_t> element_order(const GroupElement& x) const;
  bool is_identity(const GroupElement& x) const { return x == identity(); }

  /// All elements, each once. Abelian: lexicographic exponent vectors.
  /// Permutation: breadth-first closure from the identity, each layer sorted.
  /// Throws Error(InfiniteGroup) when an infinite factor is present.
  std::vector<GroupElement> enumerate() const;

  /// Words over the generator names: `*`-separated factors, optional `^k`
  /// integer exponents, "1" for the identity. A word g1*g2 denotes g1·g2.
  GroupElement parse_word(std::string_view text) const;
  /// Canonical word; parse_word(format_word(x)) == x.
  std::string format_word(const GroupElement& x) const;

  /// Throws Error(ElementMismatch) unless x is an element of this group.
  void check_element(const GroupElement& x) const;
  bool contains(const GroupElement& x) const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b);

 private:
  struct PermCache;

  std::int64_t factor_index(std::string_view name) const;

  Kind kind_ = Kind::AbelianProduct;
  std::vector<CyclicFactor> factors_;
  std::int64_t degree_ = 0;
  std::vector<PermGenerator> generators_;
  std::shared_ptr<const PermCache> perm_cache_;
};

}  // namespace brauer_cover
