#include "brauer_cover/random.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "brauer_cover/error.hpp"

namespace brauer_cover {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* text = std::getenv("BRAUER_COVER_SEED");
  if (text == nullptr) return fallback;
  std::uint64_t value = 0;
  const std::string_view s(text);
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size()) {
    throw Error(ErrorCode::MalformedInput, "BRAUER_COVER_SEED must be an unsigned integer", std::string(s));
  }
  return value;
}

BrauerPermutation random_brauer(Rng& rng, int edges, std::int64_t max_multiplicity) {
  if (edges < 1) throw Error(ErrorCode::MalformedInput, "need at least one edge", std::to_string(edges));
  const auto n = static_cast<std::size_t>(2 * edges);
  std::vector<std::string> names;
  std::vector<HalfEdgeId> tau(n);
  for (int i = 1; i <= edges; ++i) {
    names.push_back(std::to_string(i) + "+");
    names.push_back(std::to_string(i) + "-");
  }
  for (std::size_t e = 0; e < n; ++e) tau[e] = e ^ 1U;
  std::vector<HalfEdgeId> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::shuffle(sigma.begin(), sigma.end(), rng);

  std::uniform_int_distribution<std::int64_t> pick(1, std::max<std::int64_t>(1, max_multiplicity));
  std::vector<std::int64_t> mult(n, 0);
  for (std::size_t e = 0; e < n; ++e) {
    if (mult[e] != 0) continue;
    const auto m = pick(rng);
    for (auto f = e; mult[f] == 0; f = sigma[f]) mult[f] = m;
  }
  return BrauerPermutation::from_arrays(std::move(names), sigma, tau, mult);
}

GWeight random_weight(Rng& rng, const BrauerPermutation& b, const GroupSpec& group) {
  const auto elements = group.enumerate();
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  std::map<std::string, GroupElement> values;
  for (const auto& name : b.names()) values.emplace(name, elements[pick(rng)]);
  return GWeight::on_brauer(group, b, std::move(values));
}

std::optional<GWeight> random_admissible_weight(Rng& rng, const BrauerPermutation& b, const GroupSpec& group,
                                                int budget) {
  const auto elements = group.enumerate();
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::map<std::string, GroupElement> values;
    for (std::size_t v = 0; v < b.vertices().size(); ++v) {
      const auto& cycle = b.vertices()[v];
      const auto m = b.vertex_multiplicity(v);
      std::vector<GroupElement> roots;
      for (const auto& h : elements) {
        if (group.is_identity(group.power(h, m))) roots.push_back(h);
      }
      std::uniform_int_distribution<std::size_t> pick_root(0, roots.size() - 1);
      const auto target = roots[pick_root(rng)];
      auto prefix = group.identity();
      for (std::size_t j = 0; j + 1 < cycle.size(); ++j) {
        const auto& g = elements[pick(rng)];
        values.emplace(b.name(cycle[j]), g);
        prefix = group.multiply(g, prefix);
      }
      values.emplace(b.name(cycle.back()), group.multiply(target, group.inverse(prefix)));
    }
    auto w = GWeight::on_brauer(group, b, std::move(values));
    if (is_admissible(b, w)) return w;
  }
  return std::nullopt;
}

}  // namespace brauer_cover
