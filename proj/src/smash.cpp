#include "brauer_cover/smash.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "brauer_cover/error.hpp"

namespace brauer_cover {

namespace {

constexpr std::size_t kMaxCoveredHalfEdges = 1'000'000;

using Key = std::pair<HalfEdgeId, GroupElement>;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void fill_multiplicities(WindowedBrauerPermutation& out, const BrauerPermutation& b) {
  const auto sizes = out.orbit_sizes();
  out.multiplicity.assign(out.size(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto e = out.half_edges[i].base;
    const auto total = b.multiplicity(e) * static_cast<std::int64_t>(b.orbit_length(e));
    const auto len = static_cast<std::int64_t>(sizes[i]);
    if (total % len != 0) throw Error(ErrorCode::NotAdmissible, "orbit length does not divide m n", out.names[i]);
    out.multiplicity[i] = total / len;
  }
}

}  // namespace

std::string covered_name(const std::string& base, const GroupSpec& group, const GroupElement& g) {
  return base + "@" + group.format_word(g);
}

std::optional<std::size_t> WindowedBrauerPermutation::find(HalfEdgeId base, const GroupElement& g) const {
  const auto it = std::lower_bound(half_edges.begin(), half_edges.end(), CoveredHalfEdge{base, g},
                                   [](const CoveredHalfEdge& x, const CoveredHalfEdge& y) {
                                     return std::tie(x.base, x.g) < std::tie(y.base, y.g);
                                   });
  if (it == half_edges.end() || it->base != base || it->g != g) return std::nullopt;
  return static_cast<std::size_t>(it - half_edges.begin());
}

BrauerPermutation WindowedBrauerPermutation::to_brauer() const {
  if (!complete) {
    throw Error(ErrorCode::WindowRequired, "window is not closed under tau_W",
                frontier.empty() ? std::string{} : names[frontier.front()]);
  }
  return BrauerPermutation::from_arrays(names, sigma, tau, multiplicity);
}

BrauerGraph WindowedBrauerPermutation::graph() const { return make_brauer_graph(names, sigma, tau, multiplicity); }

std::vector<std::size_t> WindowedBrauerPermutation::orbit_sizes() const {
  std::vector<std::size_t> out(size(), 0);
  for (std::size_t i = 0; i < size(); ++i) {
    if (out[i] != 0) continue;
    std::vector<std::size_t> orbit{i};
    for (auto j = sigma[i]; j != i; j = sigma[j]) orbit.push_back(j);
    for (auto j : orbit) out[j] = orbit.size();
  }
  return out;
}

WindowedBrauerPermutation smash_brauer(const BrauerPermutation& b, const GWeight& w, std::optional<int> depth) {
  if (auto check = is_admissible(b, w); !check) {
    throw Error(ErrorCode::NotAdmissible, "weight is not admissible", check.witness.value_or(""));
  }
  const auto& group = w.group();
  const auto weights = w.by_half_edge(b);

  WindowedBrauerPermutation out;
  out.group = group;

  if (group.is_finite()) {
    auto layer = group.enumerate();
    if (b.size() * layer.size() > kMaxCoveredHalfEdges) {
      throw Error(ErrorCode::TooLarge, "covering has too many half edges", std::to_string(b.size() * layer.size()));
    }
    // Layers are stored in element order so that find() can binary search.
    std::sort(layer.begin(), layer.end());
    const auto n = layer.size();
    std::map<GroupElement, std::size_t> rank;
    for (std::size_t i = 0; i < n; ++i) rank.emplace(layer[i], i);

    for (HalfEdgeId e = 0; e < b.size(); ++e) {
      for (const auto& g : layer) {
        out.half_edges.push_back({e, g});
        out.names.push_back(covered_name(b.name(e), group, g));
        out.sigma.push_back(b.sigma(e) * n + rank.at(group.multiply(weights[e], g)));
        out.tau.push_back(b.tau(e) * n + rank.at(g));
      }
    }
    fill_multiplicities(out, b);
    return out;
  }

  if (!depth) throw Error(ErrorCode::WindowRequired, "an infinite group needs a window depth");
  if (*depth < 0) throw Error(ErrorCode::MalformedInput, "window depth must be non-negative", std::to_string(*depth));
  out.depth = depth;

  std::map<Key, std::size_t> index;
  std::vector<Key> keys;
  auto close_orbit = [&](HalfEdgeId e, GroupElement g) {
    // Admissibility bounds every orbit by m n.
    const auto budget = static_cast<std::size_t>(b.multiplicity(e)) * b.orbit_length(e);
    for (std::size_t step = 0; step < budget; ++step) {
      if (!index.emplace(Key{e, g}, keys.size()).second) return;
      keys.emplace_back(e, g);
      if (keys.size() > kMaxCoveredHalfEdges) throw Error(ErrorCode::TooLarge, "window has too many half edges");
      g = group.multiply(weights[e], g);
      e = b.sigma(e);
    }
  };
  for (HalfEdgeId e = 0; e < b.size(); ++e) close_orbit(e, group.identity());
  for (int round = 0; round < *depth; ++round) {
    const auto current = keys.size();
    for (std::size_t i = 0; i < current; ++i) {
      const auto [e, g] = keys[i];
      if (!index.contains(Key{b.tau(e), g})) close_orbit(b.tau(e), g);
    }
  }

  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  std::map<Key, std::size_t> position;
  for (std::size_t i = 0; i < sorted.size(); ++i) position.emplace(sorted[i], i);
  for (const auto& [e, g] : sorted) {
    out.half_edges.push_back({e, g});
    out.names.push_back(covered_name(b.name(e), group, g));
    out.sigma.push_back(position.at(Key{b.sigma(e), group.multiply(weights[e], g)}));
    const auto partner = position.find(Key{b.tau(e), g});
    if (partner == position.end()) {
      out.tau.push_back(kNoHalfEdge);
      out.frontier.push_back(out.half_edges.size() - 1);
    } else {
      out.tau.push_back(partner->second);
    }
  }
  out.complete = out.frontier.empty();
  fill_multiplicities(out, b);
  return out;
}

bool admissibility_via_orbits(const BrauerPermutation& b, const GWeight& w) {
  const auto& group = w.group();
  const auto weights = w.by_half_edge(b);
  for (HalfEdgeId start = 0; start < b.size(); ++start) {
    const auto budget = static_cast<std::size_t>(b.multiplicity(start)) * b.orbit_length(start);
    auto e = start;
    auto g = group.identity();
    std::size_t length = 0;
    for (std::size_t step = 1; step <= budget; ++step) {
      g = group.multiply(weights[e], g);
      e = b.sigma(e);
      if (e == start && group.is_identity(g)) {
        length = step;
        break;
      }
    }
    if (length == 0 || budget % length != 0) return false;
  }
  return true;
}

std::optional<std::size_t> CoveringQuiver::find_vertex(std::size_t base_vertex, const GroupElement& layer) const {
  const auto it = vertex_lookup.find({base_vertex, layer});
  if (it == vertex_lookup.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> CoveringQuiver::find_arrow(std::size_t base_arrow, const GroupElement& layer) const {
  const auto it = arrow_lookup.find({base_arrow, layer});
  if (it == arrow_lookup.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> CoveringQuiver::act_vertex(std::size_t v, const GroupElement& c) const {
  return find_vertex(vertex_base[v], group.multiply(vertex_layer[v], c));
}

std::optional<std::size_t> CoveringQuiver::act_arrow(std::size_t a, const GroupElement& c) const {
  return find_arrow(arrow_base[a], group.multiply(arrow_layer[a], c));
}

CoveringQuiver CoveringQuiver::without_arrow(std::size_t arrow) const {
  CoveringQuiver out = *this;
  out.quiver = BoundQuiver{};
  for (const auto& v : quiver.vertices()) out.quiver.add_vertex(v);
  std::vector<std::size_t> renumber(quiver.arrows().size(), kNoHalfEdge);
  out.arrow_base.clear();
  out.arrow_layer.clear();
  out.arrow_lookup.clear();
  for (std::size_t a = 0; a < quiver.arrows().size(); ++a) {
    if (a == arrow) continue;
    const auto& x = quiver.arrows()[a];
    renumber[a] = out.quiver.add_arrow(x.name, x.source, x.target);
    out.arrow_lookup.emplace(std::pair{arrow_base[a], arrow_layer[a]}, renumber[a]);
    out.arrow_base.push_back(arrow_base[a]);
    out.arrow_layer.push_back(arrow_layer[a]);
  }
  for (const auto& rel : quiver.relations()) {
    RelationGenerator copy;
    bool keep = true;
    for (const auto& term : rel.terms) {
      RelationTerm t{term.coefficient, {}};
      for (auto a : term.path) {
        if (renumber[a] == kNoHalfEdge) keep = false;
        t.path.push_back(renumber[a]);
      }
      copy.terms.push_back(std::move(t));
    }
    if (keep) out.quiver.add_relation(std::move(copy));
  }
  return out;
}

CoveringQuiver smash_quiver(const BoundQuiver& q, const GWeight& w, std::optional<std::vector<GroupElement>> window) {
  if (auto check = is_homogeneous_quiver(q, w); !check) {
    throw Error(ErrorCode::NotHomogeneous, "weight is not homogeneous", check.witness.value_or(""));
  }
  const auto& group = w.group();
  CoveringQuiver cov;
  cov.base = q;
  cov.group = group;
  cov.base_weights = w.by_arrow(q);

  if (group.is_finite()) {
    cov.layers = group.enumerate();
  } else {
    if (!window) throw Error(ErrorCode::WindowRequired, "an infinite group needs an explicit window");
    cov.windowed = true;
    for (const auto& g : *window) {
      group.check_element(g);
      if (std::find(cov.layers.begin(), cov.layers.end(), g) == cov.layers.end()) cov.layers.push_back(g);
    }
  }
  if (q.vertices().size() * cov.layers.size() > kMaxCoveredHalfEdges) {
    throw Error(ErrorCode::TooLarge, "covering quiver has too many vertices");
  }

  auto& vertex_at = cov.vertex_lookup;
  auto add_vertex = [&](std::size_t x, const GroupElement& a, bool frontier) {
    const auto v = cov.quiver.add_vertex(covered_name(q.vertices()[x], group, a));
    vertex_at.emplace(std::pair{x, a}, v);
    cov.vertex_base.push_back(x);
    cov.vertex_layer.push_back(a);
    cov.vertex_frontier.push_back(frontier);
    return v;
  };
  for (std::size_t x = 0; x < q.vertices().size(); ++x) {
    for (const auto& a : cov.layers) add_vertex(x, a, false);
  }

  auto& arrow_at = cov.arrow_lookup;
  for (std::size_t i = 0; i < q.arrows().size(); ++i) {
    const auto& alpha = q.arrows()[i];
    for (const auto& a : cov.layers) {
      const auto b = group.multiply(cov.base_weights[i], a);
      auto target = vertex_at.find({alpha.target, b});
      const auto t = target != vertex_at.end() ? target->second : add_vertex(alpha.target, b, true);
      const auto id = cov.quiver.add_arrow(covered_name(alpha.name, group, a), vertex_at.at({alpha.source, a}), t);
      arrow_at.emplace(std::pair{i, a}, id);
      cov.arrow_base.push_back(i);
      cov.arrow_layer.push_back(a);
    }
  }

  for (const auto& rel : q.relations()) {
    for (const auto& a : cov.layers) {
      RelationGenerator lifted;
      bool present = true;
      for (const auto& term : rel.terms) {
        RelationTerm t{term.coefficient, {}};
        auto layer = a;
        for (auto arrow : term.path) {
          const auto it = arrow_at.find({arrow, layer});
          if (it == arrow_at.end()) {
            present = false;
            break;
          }
          t.path.push_back(it->second);
          layer = group.multiply(cov.base_weights[arrow], layer);
        }
        if (!present) break;
        lifted.terms.push_back(std::move(t));
      }
      if (present) cov.quiver.add_relation(std::move(lifted));
    }
  }
  return cov;
}

CoveringReport check_covering(const CoveringQuiver& cov) {
  CoveringReport report;
  const auto& q = cov.quiver;
  const auto& base = cov.base;
  const auto& group = cov.group;
  auto fail = [&](bool& flag, const std::string& condition, const std::string& witness) {
    flag = false;
    report.failures.push_back(condition + ": " + witness);
  };

  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arrow = q.arrows()[a];
    const auto& image = base.arrows()[cov.arrow_base[a]];
    if (cov.vertex_base[arrow.source] != image.source || cov.vertex_base[arrow.target] != image.target) {
      fail(report.morphism, "morphism", arrow.name);
    }
  }

  std::vector<bool> hit(base.vertices().size(), false);
  for (auto x : cov.vertex_base) hit[x] = true;
  for (std::size_t x = 0; x < hit.size(); ++x) {
    if (!hit[x]) fail(report.surjective, "surjective", base.vertices()[x]);
  }

  const std::set<GroupElement> layers(cov.layers.begin(), cov.layers.end());
  auto interior = [&](std::size_t v) {
    if (cov.vertex_frontier[v]) return false;
    if (!cov.windowed) return true;
    for (auto i : base.in_arrows(cov.vertex_base[v])) {
      const auto source_layer = group.multiply(group.inverse(cov.base_weights[i]), cov.vertex_layer[v]);
      if (!layers.contains(source_layer)) return false;
    }
    return true;
  };
  auto bijective = [&](const std::vector<std::size_t>& lifted, std::vector<std::size_t> expected) {
    std::vector<std::size_t> images;
    for (auto a : lifted) images.push_back(cov.arrow_base[a]);
    std::sort(images.begin(), images.end());
    std::sort(expected.begin(), expected.end());
    return images == expected;
  };
  for (std::size_t v = 0; v < q.vertices().size(); ++v) {
    if (!interior(v)) continue;
    ++report.checked_vertices;
    const auto x = cov.vertex_base[v];
    if (!bijective(q.out_arrows(v), base.out_arrows(x))) fail(report.out_bijective, "out-bijection", q.vertices()[v]);
    if (!bijective(q.in_arrows(v), base.in_arrows(x))) fail(report.in_bijective, "in-bijection", q.vertices()[v]);
  }

  std::vector<GroupElement> elements;
  if (cov.windowed) {
    std::set<GroupElement> diffs;
    for (const auto& a : cov.layers) {
      for (const auto& b : cov.layers) diffs.insert(group.multiply(group.inverse(a), b));
    }
    elements.assign(diffs.begin(), diffs.end());
  } else {
    elements = cov.layers;
  }

  for (std::size_t v = 0; v < q.vertices().size(); ++v) {
    for (const auto& c : elements) {
      if (group.is_identity(c)) continue;
      if (cov.act_vertex(v, c) == v) {
        fail(report.action_free, "free action", q.vertices()[v] + " fixed by " + group.format_word(c));
        break;
      }
    }
  }

  UnionFind vertex_orbits(q.vertices().size());
  UnionFind arrow_orbits(q.arrows().size());
  for (const auto& c : elements) {
    for (std::size_t v = 0; v < q.vertices().size(); ++v) {
      if (auto image = cov.act_vertex(v, c)) vertex_orbits.unite(v, *image);
    }
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      if (auto image = cov.act_arrow(a, c)) arrow_orbits.unite(a, *image);
    }
  }
  for (std::size_t v = 0; v < q.vertices().size(); ++v) {
    std::set<std::size_t> seen;
    for (auto a : q.out_arrows(v)) {
      if (!seen.insert(arrow_orbits.find(a)).second) {
        fail(report.action_admissible, "admissible action", q.arrows()[a].name);
      }
    }
  }

  // Orbit quiver versus base: the base map must induce bijections on orbits
  // of vertices and arrows that commute with source and target.
  std::map<std::size_t, std::size_t> vertex_orbit_image;
  std::map<std::size_t, std::size_t> base_vertex_orbit;
  for (std::size_t v = 0; v < q.vertices().size(); ++v) {
    const auto orbit = vertex_orbits.find(v);
    const auto x = cov.vertex_base[v];
    if (auto [it, fresh] = vertex_orbit_image.emplace(orbit, x); !fresh && it->second != x) {
      fail(report.orbit_quiver_isomorphic, "orbit quiver", q.vertices()[v]);
    }
    if (auto [it, fresh] = base_vertex_orbit.emplace(x, orbit); !fresh && it->second != orbit) {
      fail(report.orbit_quiver_isomorphic, "orbit quiver", q.vertices()[v]);
    }
  }
  std::map<std::size_t, std::size_t> arrow_orbit_image;
  std::map<std::size_t, std::size_t> base_arrow_orbit;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto orbit = arrow_orbits.find(a);
    const auto i = cov.arrow_base[a];
    if (auto [it, fresh] = arrow_orbit_image.emplace(orbit, i); !fresh && it->second != i) {
      fail(report.orbit_quiver_isomorphic, "orbit quiver", q.arrows()[a].name);
    }
    if (auto [it, fresh] = base_arrow_orbit.emplace(i, orbit); !fresh && it->second != orbit) {
      fail(report.orbit_quiver_isomorphic, "orbit quiver", q.arrows()[a].name);
    }
  }
  if (base_arrow_orbit.size() != base.arrows().size()) {
    for (std::size_t i = 0; i < base.arrows().size(); ++i) {
      if (!base_arrow_orbit.contains(i)) fail(report.orbit_quiver_isomorphic, "orbit quiver", base.arrows()[i].name);
    }
  }
  return report;
}

namespace {

std::vector<RelationGenerator> normalized_sorted(std::vector<RelationGenerator> rels) {
  for (auto& r : rels) r = normalize_relation(std::move(r));
  std::sort(rels.begin(), rels.end(), [](const RelationGenerator& x, const RelationGenerator& y) {
    return std::lexicographical_compare(x.terms.begin(), x.terms.end(), y.terms.begin(), y.terms.end(),
                                        [](const RelationTerm& s, const RelationTerm& t) {
                                          return std::tie(s.path, s.coefficient) < std::tie(t.path, t.coefficient);
                                        });
  });
  return rels;
}

std::string describe(const RelationGenerator& rel, const std::vector<std::string>& arrow_names) {
  std::ostringstream out;
  for (std::size_t i = 0; i < rel.terms.size(); ++i) {
    const auto& t = rel.terms[i];
    if (i > 0) out << (t.coefficient < 0 ? " - " : " + ");
    else if (t.coefficient < 0) out << "-";
    if (std::abs(t.coefficient) != 1) out << std::abs(t.coefficient);
    for (std::size_t k = t.path.size(); k-- > 0;) out << arrow_names[t.path[k]] << (k > 0 ? "*" : "");
  }
  return out.str();
}

// Compares two relation multisets over a common arrow numbering.
bool same_relations(std::vector<RelationGenerator> lhs, std::vector<RelationGenerator> rhs,
                    const std::vector<std::string>& arrow_names, CrossValidation& result) {
  lhs = normalized_sorted(std::move(lhs));
  rhs = normalized_sorted(std::move(rhs));
  result.relations_compared = rhs.size();
  for (const auto& r : lhs) {
    if (std::find(rhs.begin(), rhs.end(), r) == rhs.end()) {
      result.mismatch = "relation only in the smash quiver: " + describe(r, arrow_names);
      return false;
    }
  }
  for (const auto& r : rhs) {
    if (std::find(lhs.begin(), lhs.end(), r) == lhs.end()) {
      result.mismatch = "relation only in the covering Brauer quiver: " + describe(r, arrow_names);
      return false;
    }
  }
  if (lhs.size() != rhs.size()) {
    result.mismatch = "relation multiplicities differ: " + std::to_string(lhs.size()) + " vs " +
                      std::to_string(rhs.size());
    return false;
  }
  return true;
}

CrossValidation cross_validate_finite(const BrauerPermutation& b, const GWeight& w) {
  CrossValidation result;
  auto fail = [&](std::string message) {
    result.ok = false;
    result.mismatch = std::move(message);
    return result;
  };
  const auto& group = w.group();
  const auto bw = smash_brauer(b, w).to_brauer();
  const auto qbw = bound_quiver(bw);
  const auto q = bound_quiver(b);
  const auto cov = smash_quiver(q, brauer_weight_on_quiver(b, w));

  auto lift = [&](HalfEdgeId e, const GroupElement& g) { return bw.at(covered_name(b.name(e), group, g)); };

  // Arrows: alpha_e^{(g)} -> alpha_{e_g}.
  std::vector<std::size_t> arrow_map(cov.quiver.arrows().size());
  std::vector<bool> arrow_hit(qbw.arrows().size(), false);
  for (std::size_t a = 0; a < cov.quiver.arrows().size(); ++a) {
    const HalfEdgeId e = cov.arrow_base[a];
    const auto target = qbw.arrow_index(quiver_arrow_name(bw, lift(e, cov.arrow_layer[a])));
    if (arrow_hit[target]) return fail("two lifted arrows rename to " + qbw.arrows()[target].name);
    arrow_hit[target] = true;
    arrow_map[a] = target;
  }
  result.arrows_compared = arrow_map.size();
  if (arrow_map.size() != qbw.arrows().size()) {
    for (std::size_t i = 0; i < arrow_hit.size(); ++i) {
      if (!arrow_hit[i]) return fail("arrow not reached by the renaming: " + qbw.arrows()[i].name);
    }
  }

  // Vertices: (<tau>e)^{(g)} -> <tau_W> e_g.
  std::vector<HalfEdgeId> representative(q.vertices().size(), kNoHalfEdge);
  for (HalfEdgeId e = 0; e < b.size(); ++e) representative[q.vertex_index(quiver_vertex_name(b, e))] = e;
  std::vector<std::size_t> vertex_map(cov.quiver.vertices().size());
  std::vector<bool> vertex_hit(qbw.vertices().size(), false);
  for (std::size_t v = 0; v < cov.quiver.vertices().size(); ++v) {
    const auto e = representative[cov.vertex_base[v]];
    const auto target = qbw.vertex_index(quiver_vertex_name(bw, lift(e, cov.vertex_layer[v])));
    if (vertex_hit[target]) return fail("two lifted vertices rename to " + qbw.vertices()[target]);
    vertex_hit[target] = true;
    vertex_map[v] = target;
  }
  result.vertices_compared = vertex_map.size();
  if (vertex_map.size() != qbw.vertices().size()) return fail("vertex counts differ");

  for (std::size_t a = 0; a < cov.quiver.arrows().size(); ++a) {
    const auto& lhs = cov.quiver.arrows()[a];
    const auto& rhs = qbw.arrows()[arrow_map[a]];
    if (vertex_map[lhs.source] != rhs.source || vertex_map[lhs.target] != rhs.target) {
      return fail("endpoints differ for " + lhs.name + " and " + rhs.name);
    }
  }

  std::vector<RelationGenerator> lifted;
  for (auto rel : cov.quiver.relations()) {
    for (auto& t : rel.terms) {
      for (auto& a : t.path) a = arrow_map[a];
    }
    lifted.push_back(std::move(rel));
  }
  std::vector<std::string> names;
  for (const auto& a : qbw.arrows()) names.push_back(a.name);
  result.ok = same_relations(std::move(lifted), qbw.relations(), names, result);
  return result;
}

// Windowed comparison over the half edges of the window: arrows alpha_{e_g}
// are identified with window indices, and relations are compared on both
// sides only where every arrow they use lies in the window.
CrossValidation cross_validate_window(const BrauerPermutation& b, const GWeight& w, int depth) {
  CrossValidation result;
  auto fail = [&](std::string message) {
    result.ok = false;
    result.mismatch = std::move(message);
    return result;
  };
  const auto win = smash_brauer(b, w, depth);
  const auto q = bound_quiver(b);

  std::set<GroupElement> layer_set;
  for (const auto& h : win.half_edges) layer_set.insert(h.g);
  const std::vector<GroupElement> layers(layer_set.begin(), layer_set.end());
  const auto cov = smash_quiver(q, brauer_weight_on_quiver(b, w), layers);

  auto vertex_key = [&](HalfEdgeId e, const GroupElement& g) {
    return std::pair{q.vertex_index(quiver_vertex_name(b, e)), g};
  };

  std::vector<std::size_t> arrow_to_window(cov.quiver.arrows().size(), kNoHalfEdge);
  std::vector<bool> window_hit(win.size(), false);
  for (std::size_t a = 0; a < cov.quiver.arrows().size(); ++a) {
    const HalfEdgeId e = cov.arrow_base[a];
    const auto idx = win.find(e, cov.arrow_layer[a]);
    if (!idx) continue;
    arrow_to_window[a] = *idx;
    window_hit[*idx] = true;
    const auto& arrow = cov.quiver.arrows()[a];
    const auto source = std::pair{cov.vertex_base[arrow.source], cov.vertex_layer[arrow.source]};
    const auto target = std::pair{cov.vertex_base[arrow.target], cov.vertex_layer[arrow.target]};
    const auto& next = win.half_edges[win.sigma[*idx]];
    if (source != vertex_key(e, cov.arrow_layer[a]) || target != vertex_key(next.base, next.g)) {
      return fail("endpoints differ for " + arrow.name);
    }
    ++result.arrows_compared;
  }
  for (std::size_t i = 0; i < win.size(); ++i) {
    if (!window_hit[i]) return fail("window half edge without a lifted arrow: " + win.names[i]);
  }
  std::set<std::pair<std::size_t, GroupElement>> keys;
  for (const auto& h : win.half_edges) keys.insert(vertex_key(h.base, h.g));
  result.vertices_compared = keys.size();

  std::vector<RelationGenerator> lifted;
  for (auto rel : cov.quiver.relations()) {
    bool inside = true;
    for (auto& t : rel.terms) {
      for (auto& a : t.path) {
        if (arrow_to_window[a] == kNoHalfEdge) inside = false;
        a = arrow_to_window[a];
      }
    }
    if (inside) lifted.push_back(std::move(rel));
  }

  std::vector<RelationGenerator> own;
  const auto sizes = win.orbit_sizes();
  auto power_cycle = [&](std::size_t x) {
    Path p{x};
    const auto length = static_cast<std::size_t>(win.multiplicity[x]) * sizes[x];
    while (p.size() < length) p.push_back(win.sigma[p.back()]);
    return p;
  };
  for (std::size_t x = 0; x < win.size(); ++x) {
    const auto partner = win.tau[win.sigma[x]];
    if (partner != kNoHalfEdge) own.push_back(RelationGenerator{{RelationTerm{1, {x, partner}}}});
  }
  for (std::size_t x = 0; x < win.size(); ++x) {
    const auto t = win.tau[x];
    if (t == kNoHalfEdge || t < x) continue;
    own.push_back(RelationGenerator{{RelationTerm{1, power_cycle(x)}, RelationTerm{-1, power_cycle(t)}}});
  }
  std::vector<std::string> names;
  for (const auto& n : win.names) names.push_back("alpha[" + n + "]");
  result.ok = same_relations(std::move(lifted), std::move(own), names, result);
  return result;
}

}  // namespace

CrossValidation cross_validate_theorem(const BrauerPermutation& b, const GWeight& w, std::optional<int> depth) {
  if (w.group().is_finite()) return cross_validate_finite(b, w);
  if (!depth) throw Error(ErrorCode::WindowRequired, "an infinite group needs a window depth");
  return cross_validate_window(b, w, *depth);
}

}  // namespace brauer_cover
