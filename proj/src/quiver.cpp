#include "brauer_cover/quiver.hpp"

#include <algorithm>

#include "brauer_cover/error.hpp"

namespace brauer_cover {

std::size_t BoundQuiver::add_vertex(std::string name) {
  if (name.empty()) throw Error(ErrorCode::InvalidQuiver, "vertex name must be nonempty");
  if (vertex_index_.contains(name)) throw Error(ErrorCode::InvalidQuiver, "duplicate vertex", name);
  vertex_index_.emplace(name, vertices_.size());
  vertices_.push_back(std::move(name));
  return vertices_.size() - 1;
}

std::size_t BoundQuiver::add_arrow(std::string name, std::size_t source, std::size_t target) {
  if (name.empty()) throw Error(ErrorCode::InvalidQuiver, "arrow name must be nonempty");
  if (arrow_index_.contains(name)) throw Error(ErrorCode::InvalidQuiver, "duplicate arrow", name);
  if (source >= vertices_.size() || target >= vertices_.size())
    throw Error(ErrorCode::InvalidQuiver, "arrow endpoint is not a vertex", name);
  arrow_index_.emplace(name, arrows_.size());
  arrows_.push_back(Arrow{std::move(name), source, target});
  return arrows_.size() - 1;
}

std::size_t BoundQuiver::add_arrow(std::string name, std::string_view source, std::string_view target) {
  return add_arrow(std::move(name), vertex_index(source), vertex_index(target));
}

std::size_t BoundQuiver::add_relation(RelationGenerator relation) {
  if (relation.terms.empty()) throw Error(ErrorCode::InvalidQuiver, "empty relation generator");
  std::optional<std::size_t> src, tgt;
  for (const auto& term : relation.terms) {
    if (term.coefficient == 0) throw Error(ErrorCode::InvalidQuiver, "zero coefficient in relation");
    if (term.path.empty()) throw Error(ErrorCode::InvalidQuiver, "empty path in relation");
    for (auto a : term.path) {
      if (a >= arrows_.size()) throw Error(ErrorCode::UnknownArrow, "relation uses an unknown arrow");
    }
    if (!is_composable(term.path))
      throw Error(ErrorCode::InvalidQuiver, "path is not composable", format_path(term.path));
    const auto s = path_source(term.path);
    const auto t = path_target(term.path);
    if (src && (*src != s || *tgt != t))
      throw Error(ErrorCode::InvalidQuiver, "relation paths are not parallel", format_relation(relation));
    src = s;
    tgt = t;
  }
  relations_.push_back(std::move(relation));
  return relations_.size() - 1;
}

std::optional<std::size_t> BoundQuiver::find_vertex(std::string_view name) const {
  if (auto it = vertex_index_.find(name); it != vertex_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> BoundQuiver::find_arrow(std::string_view name) const {
  if (auto it = arrow_index_.find(name); it != arrow_index_.end()) return it->second;
  return std::nullopt;
}

std::size_t BoundQuiver::vertex_index(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(ErrorCode::InvalidQuiver, "unknown vertex", std::string(name));
}

std::size_t BoundQuiver::arrow_index(std::string_view name) const {
  if (auto a = find_arrow(name)) return *a;
  throw Error(ErrorCode::UnknownArrow, "unknown arrow", std::string(name));
}

bool BoundQuiver::is_composable(std::span<const std::size_t> path) const {
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (arrows_[path[i - 1]].target != arrows_[path[i]].source) return false;
  }
  return true;
}

std::size_t BoundQuiver::path_source(std::span<const std::size_t> path) const {
  return arrows_[path.front()].source;
}

std::size_t BoundQuiver::path_target(std::span<const std::size_t> path) const {
  return arrows_[path.back()].target;
}

std::vector<std::size_t> BoundQuiver::out_arrows(std::size_t vertex) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source == vertex) out.push_back(a);
  return out;
}

std::vector<std::size_t> BoundQuiver::in_arrows(std::size_t vertex) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].target == vertex) out.push_back(a);
  return out;
}

std::string BoundQuiver::format_path(std::span<const std::size_t> path) const {
  std::string out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += *it < arrows_.size() ? arrows_[*it].name : "?";
  }
  return out;
}

std::string BoundQuiver::format_relation(const RelationGenerator& relation) const {
  std::string out;
  for (const auto& term : relation.terms) {
    const auto k = term.coefficient;
    if (out.empty()) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    const auto mag = k < 0 ? -k : k;
    if (mag != 1) out += std::to_string(mag) + " ";
    out += format_path(term.path);
  }
  return out;
}

RelationGenerator normalize_relation(RelationGenerator relation) {
  std::sort(relation.terms.begin(), relation.terms.end(),
            [](const RelationTerm& a, const RelationTerm& b) {
              if (a.path != b.path) return a.path < b.path;
              return a.coefficient < b.coefficient;
            });
  if (!relation.terms.empty() && relation.terms.front().coefficient < 0) {
    for (auto& t : relation.terms) t.coefficient = -t.coefficient;
  }
  return relation;
}

}  // namespace brauer_cover
