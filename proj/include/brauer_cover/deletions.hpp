#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brauer_cover/brauer.hpp"
#include "brauer_cover/groups.hpp"
#include "brauer_cover/weights.hpp"

namespace brauer_cover {

enum class DeletionKind { Multiplicity, Loops, MultipleEdges, MultipleEdgesTree, Cycles };

/// "multiplicity", "loops", "multiedges", "multiedges-tree", "cycles".
std::string_view deletion_kind_name(DeletionKind kind);
std::optional<DeletionKind> parse_deletion_kind(std::string_view name);

struct Representative {
  std::string half_edge;
  std::string role;
  std::int64_t order = 1;  // m_i or n_i

  friend bool operator==(const Representative&, const Representative&) = default;
};

/// A group together with an admissible weight on the source permutation.
struct DeletionPlan {
  GroupSpec group;
  GWeight weight;
  std::vector<Representative> representatives;
  std::vector<std::string> notes;

  friend bool operator==(const DeletionPlan&, const DeletionPlan&) = default;
};

/// G = C_m with m the lcm of the nontrivial multiplicities m_i, and
/// W(e_i) = a^{m/m_i} on the least half edge e_i of each such orbit.
DeletionPlan delete_multiplicity(const BrauerPermutation& b);

/// G = C_2 with W = a on both half edges of every loop.
DeletionPlan delete_loops(const BrauerPermutation& b);

/// G = product of C_{n_i} over the vertices carrying a multiple edge, with
/// W = a_i on the whole orbit. Throws Error(HasLoops).
DeletionPlan delete_multiple_edges(const BrauerPermutation& b);

/// G = C_n with n = lcm(n_i) over one colour class of the graph of multiple
/// edges, W = a^{n/n_i} on those orbits. Throws Error(HasLoops) or
/// Error(DeltaNotForest).
DeletionPlan delete_multiple_edges_tree(const BrauerPermutation& b);

/// G = product of Z over the cycle vertices with n_i >= 2:
/// W(sigma^j e_i) = a_i for j <= n_i - 2 and a_i^{1-n_i} for j = n_i - 1.
DeletionPlan delete_cycles(const BrauerPermutation& b);

DeletionPlan plan_deletion(DeletionKind kind, const BrauerPermutation& b);

struct PostCheck {
  struct Condition {
    std::string name;
    bool ok = true;
    std::string witness;
  };
  std::vector<Condition> conditions;

  bool ok() const;
};

/// Verifies the structural conclusion of a plan on its covering. Infinite
/// groups are checked on the window of the given depth (default 3).
PostCheck post_check(DeletionKind kind, const BrauerPermutation& b, const DeletionPlan& plan,
                     std::optional<int> depth = std::nullopt);

/// Whether the Brauer graph of a window, restricted to edges with both half
/// edges present, is a forest. Witness: an edge closing a cycle.
CheckResult window_is_forest(const BrauerGraph& graph);

}  // namespace brauer_cover
