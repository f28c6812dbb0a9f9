#include "brauer_cover/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace brauer_cover {

namespace {

[[noreturn]] void malformed(const std::string& message, std::string witness = {}) {
  throw Error(ErrorCode::MalformedInput, message, std::move(witness));
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed("expected a JSON object", key);
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field \"") + key + "\"", key);
  return *it;
}

std::string as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) malformed("expected a string for " + what, j.dump());
  return j.get<std::string>();
}

std::int64_t as_integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) malformed("expected an integer for " + what, j.dump());
  return j.get<std::int64_t>();
}

const Json& as_object(const Json& j, const std::string& what) {
  if (!j.is_object()) malformed("expected an object for " + what, j.dump());
  return j;
}

const Json& as_array(const Json& j, const std::string& what) {
  if (!j.is_array()) malformed("expected an array for " + what, j.dump());
  return j;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += (out.empty() ? "" : "\n") + l;
  return out;
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

Json path_json(const BoundQuiver& q, const Path& path) {
  Json out = Json::array();
  for (auto a : path) out.push_back(q.arrows()[a].name);
  return out;
}

}  // namespace

Json to_json(const GroupSpec& group) {
  if (group.kind() == GroupSpec::Kind::FinitePermutation) {
    Json gens = Json::object();
    for (const auto& g : group.generators()) gens[g.name] = g.image;
    return Json{{"perm_group", Json{{"degree", group.degree()}, {"generators", gens}}}};
  }
  Json factors = Json::array();
  for (const auto& f : group.factors()) {
    factors.push_back(Json{{"gen", f.name}, {"order", f.infinite() ? Json("inf") : Json(f.order)}});
  }
  return Json{{"abelian", factors}};
}

GroupSpec group_from_json(const Json& j) {
  as_object(j, "group");
  if (j.contains("abelian")) {
    std::vector<CyclicFactor> factors;
    for (const auto& f : as_array(j["abelian"], "abelian factors")) {
      const auto name = as_string(field(f, "gen"), "generator name");
      const auto& order = field(f, "order");
      if (order.is_string()) {
        if (order.get<std::string>() != "inf") malformed("order must be an integer or \"inf\"", order.dump());
        factors.push_back({name, kInfiniteOrder});
      } else {
        const auto n = as_integer(order, "order");
        if (n < 1) throw Error(ErrorCode::InvalidGroup, "cyclic order must be positive", std::to_string(n));
        factors.push_back({name, n});
      }
    }
    return GroupSpec::abelian(std::move(factors));
  }
  if (j.contains("perm_group")) {
    const auto& p = as_object(j["perm_group"], "perm_group");
    const auto degree = as_integer(field(p, "degree"), "degree");
    std::vector<PermGenerator> gens;
    for (const auto& [name, image] : as_object(field(p, "generators"), "generators").items()) {
      std::vector<std::int64_t> img;
      for (const auto& x : as_array(image, "permutation image")) img.push_back(as_integer(x, "permutation image"));
      gens.push_back({name, std::move(img)});
    }
    return GroupSpec::permutation(degree, std::move(gens));
  }
  malformed("group must have \"abelian\" or \"perm_group\"");
}

Json to_json(const BrauerPermutation& b) {
  const auto data = b.to_data();
  Json mult = Json::object();
  for (const auto& [k, m] : data.multiplicity) mult[k] = m;
  Json sigma = Json::object(), tau = Json::object();
  for (const auto& e : data.half_edges) {
    sigma[e] = data.sigma.at(e);
    tau[e] = data.tau.at(e);
  }
  return Json{{"half_edges", data.half_edges}, {"sigma", sigma}, {"tau", tau}, {"multiplicity", mult}};
}

BrauerPermutationData brauer_data_from_json(const Json& j) {
  BrauerPermutationData data;
  for (const auto& e : as_array(field(j, "half_edges"), "half_edges")) data.half_edges.push_back(as_string(e, "half edge"));
  for (const auto& [k, v] : as_object(field(j, "sigma"), "sigma").items()) data.sigma.emplace(k, as_string(v, "sigma"));
  for (const auto& [k, v] : as_object(field(j, "tau"), "tau").items()) data.tau.emplace(k, as_string(v, "tau"));
  for (const auto& [k, v] : as_object(field(j, "multiplicity"), "multiplicity").items()) {
    data.multiplicity.emplace(k, as_integer(v, "multiplicity"));
  }
  return data;
}

BrauerPermutation brauer_from_json(const Json& j) { return BrauerPermutation::from_data(brauer_data_from_json(j)); }

Json to_json(const GWeight& w) {
  Json values = Json::object();
  for (const auto& [k, g] : w.values()) values[k] = w.group().format_word(g);
  return Json{{"group", to_json(w.group())}, {"values", values}};
}

GWeight weight_from_json(const Json& j, const std::vector<std::string>& domain) {
  auto group = group_from_json(field(j, "group"));
  std::map<std::string, std::string> words;
  if (j.contains("values")) {
    for (const auto& [k, v] : as_object(j["values"], "values").items()) words.emplace(k, as_string(v, "weight value"));
  }
  return GWeight::from_words(std::move(group), domain, words);
}

GWeight weight_from_json(const Json& j, const BrauerPermutation& b) { return weight_from_json(j, b.names()); }

GWeight weight_from_json(const Json& j, const BoundQuiver& q) {
  std::vector<std::string> domain;
  for (const auto& a : q.arrows()) domain.push_back(a.name);
  return weight_from_json(j, domain);
}

Json to_json(const BoundQuiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) {
    arrows.push_back(Json{{"name", a.name}, {"source", q.vertices()[a.source]}, {"target", q.vertices()[a.target]}});
  }
  Json relations = Json::array();
  for (const auto& rel : q.relations()) {
    Json terms = Json::array();
    for (const auto& t : rel.terms) terms.push_back(Json{{"coefficient", t.coefficient}, {"path", path_json(q, t.path)}});
    relations.push_back(terms);
  }
  return Json{{"vertices", q.vertices()}, {"arrows", arrows}, {"relations", relations}};
}

BoundQuiver quiver_from_json(const Json& j) {
  BoundQuiver q;
  for (const auto& v : as_array(field(j, "vertices"), "vertices")) q.add_vertex(as_string(v, "vertex"));
  for (const auto& a : as_array(field(j, "arrows"), "arrows")) {
    const auto source = as_string(field(a, "source"), "arrow source");
    const auto target = as_string(field(a, "target"), "arrow target");
    if (!q.find_vertex(source)) throw Error(ErrorCode::InvalidQuiver, "arrow source is not a vertex", source);
    if (!q.find_vertex(target)) throw Error(ErrorCode::InvalidQuiver, "arrow target is not a vertex", target);
    q.add_arrow(as_string(field(a, "name"), "arrow name"), source, target);
  }
  if (j.contains("relations")) {
    for (const auto& rel : as_array(j["relations"], "relations")) {
      RelationGenerator gen;
      for (const auto& t : as_array(rel, "relation terms")) {
        RelationTerm term;
        term.coefficient = t.contains("coefficient") ? as_integer(t["coefficient"], "coefficient") : 1;
        for (const auto& a : as_array(field(t, "path"), "path")) term.path.push_back(q.arrow_index(as_string(a, "arrow")));
        gen.terms.push_back(std::move(term));
      }
      q.add_relation(std::move(gen));
    }
  }
  return q;
}

Json to_json(const WindowedBrauerPermutation& b) {
  std::vector<std::size_t> order(b.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return b.names[x] < b.names[y]; });

  Json half_edges = Json::array(), sigma = Json::object(), tau = Json::object();
  for (auto i : order) {
    half_edges.push_back(b.names[i]);
    sigma[b.names[i]] = b.names[b.sigma[i]];
    tau[b.names[i]] = b.tau[i] == kNoHalfEdge ? Json(nullptr) : Json(b.names[b.tau[i]]);
  }
  // One entry per sigma_W-orbit, keyed by its least member.
  std::set<std::size_t> done;
  Json mult = Json::object();
  for (auto i : order) {
    if (done.contains(i)) continue;
    auto k = i;
    while (done.insert(k).second) k = b.sigma[k];
    mult[b.names[i]] = b.multiplicity[i];
  }
  Json frontier = Json::array();
  std::vector<std::string> names;
  for (auto i : b.frontier) names.push_back(b.names[i]);
  std::sort(names.begin(), names.end());
  for (const auto& n : names) frontier.push_back(n);

  Json out{{"group", to_json(b.group)},
           {"half_edges", half_edges},
           {"sigma", sigma},
           {"tau", tau},
           {"multiplicity", mult},
           {"frontier", frontier},
           {"complete", b.complete}};
  if (b.depth) out["depth"] = *b.depth;
  return out;
}

Json to_json(const CoveringQuiver& cov) {
  auto out = to_json(cov.quiver);
  Json layers = Json::array();
  for (const auto& g : cov.layers) layers.push_back(cov.group.format_word(g));
  Json frontier = Json::array();
  for (std::size_t v = 0; v < cov.vertex_frontier.size(); ++v) {
    if (cov.vertex_frontier[v]) frontier.push_back(cov.quiver.vertices()[v]);
  }
  Json result{{"group", to_json(cov.group)}, {"layers", layers}};
  for (auto& [k, v] : out.items()) result[k] = v;
  result["frontier"] = frontier;
  return result;
}

Json to_json(const DeletionPlan& plan) {
  Json reps = Json::array();
  for (const auto& r : plan.representatives) {
    reps.push_back(Json{{"half_edge", r.half_edge}, {"role", r.role}, {"order", r.order}});
  }
  return Json{{"group", to_json(plan.group)},
              {"weight", to_json(plan.weight)},
              {"representatives", reps},
              {"notes", join_lines(plan.notes)}};
}

DeletionPlan plan_from_json(const Json& j, const BrauerPermutation& b) {
  auto group = group_from_json(field(j, "group"));
  auto weight = weight_from_json(field(j, "weight"), b);
  if (!(weight.group() == group)) malformed("plan weight is over a different group");
  std::vector<Representative> reps;
  for (const auto& r : as_array(field(j, "representatives"), "representatives")) {
    reps.push_back({as_string(field(r, "half_edge"), "representative"), as_string(field(r, "role"), "role"),
                    as_integer(field(r, "order"), "order")});
  }
  std::vector<std::string> notes;
  std::istringstream text(as_string(field(j, "notes"), "notes"));
  for (std::string line; std::getline(text, line);) notes.push_back(line);
  return DeletionPlan{std::move(group), std::move(weight), std::move(reps), std::move(notes)};
}

Json to_json(const BrauerGraph& graph) {
  Json vertices = Json::array();
  for (const auto& v : graph.vertices) {
    vertices.push_back(Json{{"name", v.name}, {"cycle", v.cycle}, {"multiplicity", v.multiplicity}});
  }
  Json edges = Json::array();
  for (const auto& e : graph.edges) {
    edges.push_back(Json{{"name", e.name},
                         {"half_edges", {e.first, e.second}},
                         {"u", graph.vertices[e.u].name},
                         {"v", graph.vertices[e.v].name}});
  }
  Json out{{"vertices", vertices}, {"edges", edges}};
  if (!graph.dangling.empty()) {
    Json dangling = Json::array();
    for (const auto& d : graph.dangling) dangling.push_back(Json{{"half_edge", d.half_edge}, {"vertex", graph.vertices[d.vertex].name}});
    out["dangling"] = dangling;
  }
  return out;
}

BrauerGraph brauer_graph_from_json(const Json& j) {
  BrauerGraph graph;
  std::map<std::string, std::size_t> vertex_index;
  for (const auto& v : as_array(field(j, "vertices"), "vertices")) {
    GraphVertex vertex;
    vertex.name = as_string(field(v, "name"), "vertex name");
    for (const auto& h : as_array(field(v, "cycle"), "cycle")) vertex.cycle.push_back(as_string(h, "half edge"));
    vertex.multiplicity = as_integer(field(v, "multiplicity"), "multiplicity");
    if (!vertex_index.emplace(vertex.name, graph.vertices.size()).second) malformed("duplicate vertex", vertex.name);
    for (const auto& h : vertex.cycle) {
      if (!graph.half_edge_vertex.emplace(h, graph.vertices.size()).second) malformed("duplicate half edge", h);
    }
    graph.vertices.push_back(std::move(vertex));
  }
  const auto vertex_of = [&](const Json& name) {
    const auto it = vertex_index.find(as_string(name, "vertex"));
    if (it == vertex_index.end()) malformed("unknown vertex", name.get<std::string>());
    return it->second;
  };
  for (const auto& e : as_array(field(j, "edges"), "edges")) {
    const auto& halves = as_array(field(e, "half_edges"), "half_edges");
    if (halves.size() != 2) malformed("an edge has two half edges", e.dump());
    graph.edges.push_back(GraphEdge{as_string(field(e, "name"), "edge name"), as_string(halves[0], "half edge"),
                                    as_string(halves[1], "half edge"), vertex_of(field(e, "u")),
                                    vertex_of(field(e, "v"))});
  }
  if (j.contains("dangling")) {
    for (const auto& d : as_array(j["dangling"], "dangling")) {
      graph.dangling.push_back(
          DanglingHalfEdge{as_string(field(d, "half_edge"), "half edge"), vertex_of(field(d, "vertex"))});
    }
  }
  return graph;
}

Json to_json(const GraphClassification& c) {
  return Json{{"has_loops", c.has_loops},
              {"has_multiple_edges", c.has_multiple_edges},
              {"multiplicity_trivial", c.multiplicity_trivial},
              {"is_tree", c.is_tree},
              {"is_connected", c.is_connected},
              {"cycle_vertices", c.cycle_vertices}};
}

Json to_json(const CoveringReport& report) {
  return Json{{"ok", report.ok()},
              {"surjective", report.surjective},
              {"morphism", report.morphism},
              {"out_bijective", report.out_bijective},
              {"in_bijective", report.in_bijective},
              {"action_free", report.action_free},
              {"action_admissible", report.action_admissible},
              {"orbit_quiver_isomorphic", report.orbit_quiver_isomorphic},
              {"checked_vertices", report.checked_vertices},
              {"failures", report.failures}};
}

Json to_json(const CrossValidation& result) {
  return Json{{"ok", result.ok},
              {"vertices_compared", result.vertices_compared},
              {"arrows_compared", result.arrows_compared},
              {"relations_compared", result.relations_compared},
              {"mismatch", result.mismatch.empty() ? Json(nullptr) : Json(result.mismatch)}};
}

Json to_json(const PostCheck& check) {
  Json conditions = Json::array();
  for (const auto& c : check.conditions) {
    conditions.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"witness", c.witness.empty() ? Json(nullptr) : Json(c.witness)}});
  }
  return Json{{"ok", check.ok()}, {"conditions", conditions}};
}

Json to_json(const Error& error) {
  return Json{{"error", std::string(error_code_name(error.code()))},
              {"message", error.what()},
              {"witness", error.witness().empty() ? Json(nullptr) : Json(error.witness())}};
}

std::string graph_dot(const BrauerGraph& graph, std::string_view name) {
  std::set<std::size_t> open;
  for (const auto& d : graph.dangling) open.insert(d.vertex);
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    const auto& vx = graph.vertices[v];
    auto label = vx.name;
    if (vx.multiplicity != 1) label += " (" + std::to_string(vx.multiplicity) + ")";
    out << "  v" << v << " [label=\"" << dot_escape(label) << "\"" << (open.contains(v) ? ", style=dashed" : "")
        << "];\n";
  }
  for (const auto& e : graph.edges) {
    out << "  v" << e.u << " -- v" << e.v << " [label=\"" << dot_escape(e.name) << "\", taillabel=\""
        << dot_escape(e.first) << "\", headlabel=\"" << dot_escape(e.second) << "\"];\n";
  }
  for (std::size_t i = 0; i < graph.dangling.size(); ++i) {
    const auto& d = graph.dangling[i];
    out << "  d" << i << " [shape=point, style=dashed];\n";
    out << "  v" << d.vertex << " -- d" << i << " [style=dashed, taillabel=\"" << dot_escape(d.half_edge) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string quiver_dot(const BoundQuiver& q, std::string_view name, const std::vector<bool>& frontier) {
  auto is_frontier = [&](std::size_t v) { return v < frontier.size() && frontier[v]; };
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  if (!q.relations().empty()) {
    out << "  // relations:\n";
    for (const auto& rel : q.relations()) out << "  //   " << q.format_relation(rel) << "\n";
  }
  for (std::size_t v = 0; v < q.vertices().size(); ++v) {
    out << "  q" << v << " [label=\"" << dot_escape(q.vertices()[v]) << "\"" << (is_frontier(v) ? ", style=dashed" : "")
        << "];\n";
  }
  for (const auto& a : q.arrows()) {
    out << "  q" << a.source << " -> q" << a.target << " [label=\"" << dot_escape(a.name) << "\""
        << (is_frontier(a.target) ? ", style=dashed" : "") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string quiver_dot(const CoveringQuiver& cov, std::string_view name) {
  return quiver_dot(cov.quiver, name, cov.vertex_frontier);
}

std::string relations_text(const BoundQuiver& q) {
  std::string out;
  for (const auto& rel : q.relations()) out += q.format_relation(rel) + "\n";
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open file", path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what(), path);
  }
}

}  // namespace brauer_cover
