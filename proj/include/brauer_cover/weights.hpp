#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brauer_cover/brauer.hpp"
#include "brauer_cover/groups.hpp"
#include "brauer_cover/quiver.hpp"

namespace brauer_cover {

/// A G-weight: a total map from half edges (or arrow names) to G.
class GWeight {
 public:
  /// Fills every key of `domain` missing from `values` with the identity.
  /// Throws Error(UnknownHalfEdge) for keys outside the domain and
  /// Error(ElementMismatch) for values outside the group.
  static GWeight with_defaults(GroupSpec group, const std::vector<std::string>& domain,
                               std::map<std::string, GroupElement> values);
  static GWeight on_brauer(GroupSpec group, const BrauerPermutation& b,
                           std::map<std::string, GroupElement> values = {});
  static GWeight on_quiver(GroupSpec group, const BoundQuiver& q, std::map<std::string, GroupElement> values = {});
  /// Convenience: values given as words.
  static GWeight from_words(GroupSpec group, const std::vector<std::string>& domain,
                            const std::map<std::string, std::string>& words);

  const GroupSpec& group() const { return group_; }
  const std::map<std::string, GroupElement>& values() const { return values_; }
  /// Throws Error(UnknownHalfEdge) when `key` is not in the domain.
  const GroupElement& at(std::string_view key) const;

  /// Values indexed by HalfEdgeId.
  std::vector<GroupElement> by_half_edge(const BrauerPermutation& b) const;
  /// Values indexed by arrow id. Throws Error(UnknownArrow) for a missing arrow.
  std::vector<GroupElement> by_arrow(const BoundQuiver& q) const;

  friend bool operator==(const GWeight& a, const GWeight& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

 private:
  GWeight(GroupSpec group, std::map<std::string, GroupElement> values)
      : group_(std::move(group)), values_(std::move(values)) {}

  GroupSpec group_;
  std::map<std::string, GroupElement> values_;
};

struct CheckResult {
  bool ok = true;
  std::optional<std::string> witness;

  explicit operator bool() const { return ok; }
};

/// W(alpha_n)...W(alpha_1) for a path given in application order.
GroupElement path_weight(const GroupSpec& group, std::span<const GroupElement> arrow_weights,
                         std::span<const std::size_t> path);
GroupElement path_weight(const GWeight& w, const BoundQuiver& q, std::span<const std::size_t> path);

/// W(mu_e) for the special cycle at e.
GroupElement special_cycle_weight(const GroupSpec& group, const BrauerPermutation& b,
                                  std::span<const GroupElement> weights, HalfEdgeId e);

/// W(mu_e)^{m(<sigma>e)} = 1 for all e. Witness: the least violating half edge.
CheckResult is_admissible(const BrauerPermutation& b, const GWeight& w);
/// W(mu_e^{m}) = W(mu_{tau e}^{m'}) for all e. Witness: least violating half edge.
CheckResult is_homogeneous_brauer(const BrauerPermutation& b, const GWeight& w);
/// Every path of a relation generator has the weight of its first path.
/// Witness: the formatted generator.
CheckResult is_homogeneous_quiver(const BoundQuiver& q, const GWeight& w);

/// Transports a half-edge weight to the arrows alpha_e of bound_quiver(b).
GWeight brauer_weight_on_quiver(const BrauerPermutation& b, const GWeight& w);

}  // namespace brauer_cover
