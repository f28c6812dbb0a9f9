#include "brauer_cover/weights.hpp"

#include <set>

#include "brauer_cover/error.hpp"

namespace brauer_cover {

GWeight GWeight::with_defaults(GroupSpec group, const std::vector<std::string>& domain,
                               std::map<std::string, GroupElement> values) {
  const std::set<std::string> keys(domain.begin(), domain.end());
  for (const auto& [k, v] : values) {
    if (!keys.contains(k)) throw Error(ErrorCode::UnknownHalfEdge, "weight given on an unknown key", k);
    group.check_element(v);
  }
  for (const auto& k : domain) values.try_emplace(k, group.identity());
  return GWeight(std::move(group), std::move(values));
}

GWeight GWeight::on_brauer(GroupSpec group, const BrauerPermutation& b, std::map<std::string, GroupElement> values) {
  return with_defaults(std::move(group), b.names(), std::move(values));
}

GWeight GWeight::on_quiver(GroupSpec group, const BoundQuiver& q, std::map<std::string, GroupElement> values) {
  std::vector<std::string> domain;
  for (const auto& a : q.arrows()) domain.push_back(a.name);
  return with_defaults(std::move(group), domain, std::move(values));
}

GWeight GWeight::from_words(GroupSpec group, const std::vector<std::string>& domain,
                            const std::map<std::string, std::string>& words) {
  std::map<std::string, GroupElement> values;
  for (const auto& [k, word] : words) values.emplace(k, group.parse_word(word));
  return with_defaults(std::move(group), domain, std::move(values));
}

const GroupElement& GWeight::at(std::string_view key) const {
  if (auto it = values_.find(std::string(key)); it != values_.end()) return it->second;
  throw Error(ErrorCode::UnknownHalfEdge, "weight is not defined on this key", std::string(key));
}

std::vector<GroupElement> GWeight::by_half_edge(const BrauerPermutation& b) const {
  std::vector<GroupElement> out;
  out.reserve(b.size());
  for (const auto& name : b.names()) out.push_back(at(name));
  return out;
}

std::vector<GroupElement> GWeight::by_arrow(const BoundQuiver& q) const {
  std::vector<GroupElement> out;
  out.reserve(q.arrows().size());
  for (const auto& a : q.arrows()) {
    auto it = values_.find(a.name);
    if (it == values_.end()) throw Error(ErrorCode::UnknownArrow, "weight is not defined on arrow", a.name);
    out.push_back(it->second);
  }
  return out;
}

GroupElement path_weight(const GroupSpec& group, std::span<const GroupElement> arrow_weights,
                         std::span<const std::size_t> path) {
  GroupElement acc = group.identity();
  for (auto a : path) {
    if (a >= arrow_weights.size()) throw Error(ErrorCode::UnknownArrow, "path uses an unknown arrow");
    acc = group.multiply(arrow_weights[a], acc);
  }
  return acc;
}

GroupElement path_weight(const GWeight& w, const BoundQuiver& q, std::span<const std::size_t> path) {
  return path_weight(w.group(), w.by_arrow(q), path);
}

GroupElement special_cycle_weight(const GroupSpec& group, const BrauerPermutation& b,
                                  std::span<const GroupElement> weights, HalfEdgeId e) {
  return path_weight(group, weights, special_cycle(b, e));
}

namespace {

GroupElement cycle_power_weight(const BrauerPermutation& b, const GroupSpec& g, std::span<const GroupElement> w,
                                HalfEdgeId e) {
  return g.power(special_cycle_weight(g, b, w, e), b.multiplicity(e));
}

}  // namespace

CheckResult is_admissible(const BrauerPermutation& b, const GWeight& w) {
  const auto& g = w.group();
  const auto values = w.by_half_edge(b);
  for (HalfEdgeId e = 0; e < b.size(); ++e) {
    if (!g.is_identity(cycle_power_weight(b, g, values, e))) return CheckResult{false, b.name(e)};
  }
  return {};
}

CheckResult is_homogeneous_brauer(const BrauerPermutation& b, const GWeight& w) {
  const auto& g = w.group();
  const auto values = w.by_half_edge(b);
  for (HalfEdgeId e = 0; e < b.size(); ++e) {
    if (cycle_power_weight(b, g, values, e) != cycle_power_weight(b, g, values, b.tau(e)))
      return CheckResult{false, b.name(e)};
  }
  return {};
}

CheckResult is_homogeneous_quiver(const BoundQuiver& q, const GWeight& w) {
  const auto values = w.by_arrow(q);
  for (const auto& rel : q.relations()) {
    const auto first = path_weight(w.group(), values, rel.terms.front().path);
    for (const auto& term : rel.terms) {
      if (path_weight(w.group(), values, term.path) != first) return CheckResult{false, q.format_relation(rel)};
    }
  }
  return {};
}

GWeight brauer_weight_on_quiver(const BrauerPermutation& b, const GWeight& w) {
  std::map<std::string, GroupElement> values;
  for (HalfEdgeId e = 0; e < b.size(); ++e) values.emplace(quiver_arrow_name(b, e), w.at(b.name(e)));
  std::vector<std::string> domain;
  for (const auto& [k, v] : values) domain.push_back(k);
  return GWeight::with_defaults(w.group(), domain, std::move(values));
}

}  // namespace brauer_cover
