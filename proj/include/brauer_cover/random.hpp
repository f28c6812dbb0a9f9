#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "brauer_cover/brauer.hpp"
#include "brauer_cover/groups.hpp"
#include "brauer_cover/weights.hpp"

namespace brauer_cover {

using Rng = std::mt19937_64;

/// BRAUER_COVER_SEED when set to an integer, otherwise `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

/// Half edges "1+", "1-", ..., "k+", "k-" with tau(i+) = i-, a uniformly
/// random sigma and multiplicities drawn from [1, max_multiplicity].
BrauerPermutation random_brauer(Rng& rng, int edges, std::int64_t max_multiplicity = 1);

/// Uniformly random values on every half edge; not necessarily admissible.
GWeight random_weight(Rng& rng, const BrauerPermutation& b, const GroupSpec& group);

/// Random values on every half edge but the last of each sigma-orbit, whose
/// value is solved for so that W(mu)^m = 1. Retries up to `budget` times;
/// nullopt if no admissible weight was found. Finite groups only.
std::optional<GWeight> random_admissible_weight(Rng& rng, const BrauerPermutation& b, const GroupSpec& group,
                                                int budget = 1000);

}  // namespace brauer_cover
