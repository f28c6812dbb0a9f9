#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brauer_cover/brauer.hpp"
#include "brauer_cover/deletions.hpp"
#include "brauer_cover/error.hpp"
#include "brauer_cover/fixtures.hpp"
#include "brauer_cover/io.hpp"
#include "brauer_cover/iso.hpp"
#include "brauer_cover/random.hpp"
#include "brauer_cover/smash.hpp"

namespace bc = brauer_cover;

namespace {

constexpr int kDefaultDepth = 3;

struct Input {
  std::string label;
  std::optional<bc::BrauerPermutation> brauer;
  std::optional<bc::BoundQuiver> quiver;
  std::optional<bc::GWeight> weight;
  const bc::Fixture* fixture = nullptr;
};

bool is_file(const std::string& arg) {
  std::error_code ec;
  return std::filesystem::is_regular_file(arg, ec);
}

// A file path or a fixture id.
Input load(const std::string& arg) {
  Input in{arg, std::nullopt, std::nullopt, std::nullopt, nullptr};
  if (is_file(arg)) {
    const auto j = bc::read_json_file(arg);
    if (j.is_object() && j.contains("half_edges")) {
      in.brauer = bc::brauer_from_json(j);
    } else if (j.is_object() && j.contains("arrows")) {
      in.quiver = bc::quiver_from_json(j);
    } else {
      throw bc::Error(bc::ErrorCode::MalformedInput, "expected a Brauer permutation or a bound quiver", arg);
    }
    return in;
  }
  if (const auto* f = bc::find_fixture(arg)) {
    in.fixture = f;
    in.brauer = f->brauer;
    in.quiver = f->quiver;
    in.weight = f->weight;
    return in;
  }
  throw bc::Error(bc::ErrorCode::MalformedInput, "no such file or fixture", arg);
}

const bc::BrauerPermutation& need_brauer(const Input& in) {
  if (!in.brauer) throw bc::Error(bc::ErrorCode::MalformedInput, "expected a Brauer permutation", in.label);
  return *in.brauer;
}

const bc::BoundQuiver& need_quiver(const Input& in) {
  if (!in.quiver) throw bc::Error(bc::ErrorCode::MalformedInput, "expected a bound quiver", in.label);
  return *in.quiver;
}

bc::GWeight load_weight(const Input& in, const std::string& arg) {
  if (arg.empty()) {
    if (in.weight) return *in.weight;
    throw bc::Error(bc::ErrorCode::MalformedInput, "a weight is required (--weight)", in.label);
  }
  if (!is_file(arg)) {
    if (const auto* f = bc::find_fixture(arg); f != nullptr && f->weight) return *f->weight;
    throw bc::Error(bc::ErrorCode::MalformedInput, "no such weight file or fixture", arg);
  }
  const auto j = bc::read_json_file(arg);
  if (in.brauer) return bc::weight_from_json(j, *in.brauer);
  return bc::weight_from_json(j, need_quiver(in));
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw bc::Error(bc::ErrorCode::MalformedInput, "cannot write file", path);
  out << text;
}

std::string dump(const bc::Json& j) { return j.dump(2) + "\n"; }

std::vector<bc::GroupElement> parse_window(const bc::GroupSpec& group, const std::string& text) {
  std::vector<bc::GroupElement> out;
  std::stringstream in(text);
  for (std::string word; std::getline(in, word, ',');) {
    const auto first = word.find_first_not_of(' ');
    const auto last = word.find_last_not_of(' ');
    if (first == std::string::npos) throw bc::Error(bc::ErrorCode::MalformedWord, "empty window element", text);
    out.push_back(group.parse_word(word.substr(first, last - first + 1)));
  }
  return out;
}

std::optional<int> depth_for(const Input& in, std::optional<int> depth) {
  if (depth) return depth;
  if (in.fixture != nullptr && in.fixture->expected.window_depth) return in.fixture->expected.window_depth;
  return std::nullopt;
}

int fail_check(const std::string& what, const std::string& witness) {
  std::cerr << bc::Json{{"error", what}, {"witness", witness}}.dump() << "\n";
  return 1;
}

int cmd_validate(const std::string& arg) {
  if (!is_file(arg)) {
    need_brauer(load(arg));
    std::cout << dump(bc::Json{{"valid", true}});
    return 0;
  }
  const auto data = bc::brauer_data_from_json(bc::read_json_file(arg));
  const auto violations = bc::validate(data);
  if (violations.empty()) {
    std::cout << dump(bc::Json{{"valid", true}, {"half_edges", data.half_edges.size()}});
    return 0;
  }
  bc::Json list = bc::Json::array();
  for (const auto& v : violations) {
    list.push_back(bc::Json{{"kind", v.kind}, {"half_edges", v.half_edges}, {"message", v.message}});
  }
  const auto& first = violations.front();
  const auto witness = first.half_edges.empty() ? bc::Json(nullptr) : bc::Json(first.half_edges.front());
  std::cerr << bc::Json{{"error", "InvalidBrauer"}, {"witness", witness}, {"violations", list}}.dump() << "\n";
  return 1;
}

int cmd_graph(const std::string& arg, const std::string& dot) {
  const auto graph = bc::brauer_graph(need_brauer(load(arg)));
  auto j = bc::to_json(graph);
  j["classification"] = bc::to_json(bc::classify(graph));
  std::cout << dump(j);
  if (!dot.empty()) write_text(dot, bc::graph_dot(graph));
  return 0;
}

int cmd_quiver(const std::string& arg, const std::string& dot, const std::string& relations) {
  const auto q = bc::bound_quiver(need_brauer(load(arg)));
  std::cout << dump(bc::to_json(q));
  if (!dot.empty()) write_text(dot, bc::quiver_dot(q));
  if (!relations.empty()) write_text(relations, bc::relations_text(q));
  return 0;
}

int cmd_smash(const std::string& arg, const std::string& weight, std::optional<int> depth, const std::string& out,
              const std::string& dot) {
  const auto in = load(arg);
  const auto& b = need_brauer(in);
  const auto w = load_weight(in, weight);
  const auto cover = bc::smash_brauer(b, w, depth_for(in, depth));
  write_text(out, dump(bc::to_json(cover)));
  if (!dot.empty()) write_text(dot, bc::graph_dot(cover.graph(), "covering_graph"));
  return 0;
}

int cmd_smash_quiver(const std::string& arg, const std::string& weight, const std::string& window,
                     const std::string& out, const std::string& dot) {
  const auto in = load(arg);
  const auto& q = need_quiver(in);
  const auto w = load_weight(in, weight);
  std::optional<std::vector<bc::GroupElement>> layers;
  if (!window.empty()) {
    layers = parse_window(w.group(), window);
  } else if (in.fixture != nullptr && !in.fixture->expected.window.empty()) {
    layers.emplace();
    for (const auto& word : in.fixture->expected.window) layers->push_back(w.group().parse_word(word));
  }
  const auto cov = bc::smash_quiver(q, w, layers);
  write_text(out, dump(bc::to_json(cov)));
  if (!dot.empty()) write_text(dot, bc::quiver_dot(cov));
  return 0;
}

int cmd_delete(const std::string& kind_name, const std::string& arg, bool apply, std::optional<int> depth,
               const std::string& out, bool json) {
  const auto kind = bc::parse_deletion_kind(kind_name);
  if (!kind) throw bc::Error(bc::ErrorCode::MalformedInput, "unknown deletion kind", kind_name);
  const auto in = load(arg);
  const auto& b = need_brauer(in);
  const auto plan = bc::plan_deletion(*kind, b);

  std::optional<bc::PostCheck> check;
  if (apply) {
    const auto d = plan.group.is_finite() ? std::nullopt : std::optional(depth.value_or(kDefaultDepth));
    const auto cover = bc::smash_brauer(b, plan.weight, d);
    write_text(out, dump(bc::to_json(cover)));
    check = bc::post_check(*kind, b, plan, d);
  }

  if (json) {
    auto j = bc::to_json(plan);
    if (check) j["post_check"] = bc::to_json(*check);
    std::cout << dump(j);
  } else {
    std::cout << "delete " << kind_name << " on " << in.label << "\n";
    for (const auto& note : plan.notes) std::cout << "  " << note << "\n";
    std::cout << "representatives:";
    if (plan.representatives.empty()) std::cout << " none";
    for (const auto& r : plan.representatives) std::cout << " " << r.half_edge << " (" << r.role << ", " << r.order << ")";
    std::cout << "\nweight:";
    for (const auto& [k, g] : plan.weight.values()) {
      if (!plan.group.is_identity(g)) std::cout << " W(" << k << ")=" << plan.group.format_word(g);
    }
    std::cout << "\n";
    if (check) {
      std::cout << "covering written to " << (out.empty() ? "stdout" : out) << "\n";
      for (const auto& c : check->conditions) {
        std::cout << "  " << (c.ok ? "ok  " : "FAIL") << " " << c.name << (c.ok ? "" : " at " + c.witness) << "\n";
      }
    }
  }
  if (check && !check->ok()) {
    for (const auto& c : check->conditions) {
      if (!c.ok) return fail_check("PostCheckFailed", c.name + ": " + c.witness);
    }
  }
  return 0;
}

int cmd_check_covering(const std::string& arg, const std::string& weight, std::optional<int> depth,
                       const std::string& window) {
  const auto in = load(arg);
  const auto w = load_weight(in, weight);
  bc::Json out;
  std::string failure;
  if (in.brauer) {
    const auto& b = *in.brauer;
    const auto d = depth_for(in, depth);
    const bool finite = w.group().is_finite();
    if (!finite && !d) throw bc::Error(bc::ErrorCode::WindowRequired, "an infinite group needs --depth", in.label);
    const auto cover = bc::smash_brauer(b, w, d);
    std::optional<std::vector<bc::GroupElement>> layers;
    if (!finite) {
      layers.emplace();
      for (const auto& h : cover.half_edges) {
        if (std::find(layers->begin(), layers->end(), h.g) == layers->end()) layers->push_back(h.g);
      }
    }
    const auto cov = bc::smash_quiver(bc::bound_quiver(b), bc::brauer_weight_on_quiver(b, w), layers);
    const auto report = bc::check_covering(cov);
    const auto cross = bc::cross_validate_theorem(b, w, d);
    out = bc::Json{{"covering", bc::to_json(report)}, {"cross_validation", bc::to_json(cross)}};
    if (!report.ok()) failure = report.failures.front();
    else if (!cross.ok) failure = cross.mismatch;
  } else {
    const auto& q = need_quiver(in);
    std::optional<std::vector<bc::GroupElement>> layers;
    if (!window.empty()) {
      layers = parse_window(w.group(), window);
    } else if (in.fixture != nullptr && !in.fixture->expected.window.empty()) {
      layers.emplace();
      for (const auto& word : in.fixture->expected.window) layers->push_back(w.group().parse_word(word));
    }
    const auto report = bc::check_covering(bc::smash_quiver(q, w, layers));
    out = bc::Json{{"covering", bc::to_json(report)}};
    if (!report.ok()) failure = report.failures.front();
  }
  std::cout << dump(out);
  return failure.empty() ? 0 : fail_check("CoveringCheckFailed", failure);
}

int cmd_iso(const std::string& x, const std::string& y, const std::string& mode) {
  const auto b1 = need_brauer(load(x));
  const auto b2 = need_brauer(load(y));
  bc::Json out = bc::Json::object();
  if (mode == "ribbon") {
    const auto phi = bc::ribbon_iso(b1, b2);
    if (!phi) {
      std::cout << "not isomorphic\n";
      return 0;
    }
    for (std::size_t e = 0; e < b1.size(); ++e) out[b1.name(e)] = b2.name(phi->image[e]);
  } else {
    const auto g1 = bc::brauer_graph(b1), g2 = bc::brauer_graph(b2);
    const auto map = bc::graph_iso(g1, g2);
    if (!map) {
      std::cout << "not isomorphic\n";
      return 0;
    }
    for (std::size_t v = 0; v < g1.vertices.size(); ++v) out[g1.vertices[v].name] = g2.vertices[(*map)[v]].name;
  }
  std::cout << dump(out);
  return 0;
}

bc::Json fixture_json(const bc::Fixture& f) {
  bc::Json j{{"id", f.id}, {"description", f.description}};
  if (f.brauer) j["brauer"] = bc::to_json(*f.brauer);
  if (f.quiver) j["quiver"] = bc::to_json(*f.quiver);
  if (f.weight) j["weight"] = bc::to_json(*f.weight);
  const auto& e = f.expected;
  bc::Json expected{{"vertices", e.vertices}, {"edges", e.edges}};
  if (f.quiver) expected["relations"] = e.relations;
  if (f.brauer) {
    expected["has_loops"] = e.has_loops;
    expected["has_multiple_edges"] = e.has_multiple_edges;
    expected["multiplicity_trivial"] = e.multiplicity_trivial;
  }
  if (e.deletion) expected["deletion"] = std::string(bc::deletion_kind_name(*e.deletion));
  if (e.window_depth) expected["window_depth"] = *e.window_depth;
  if (!e.window.empty()) expected["window"] = e.window;
  if (f.weight) {
    if (f.brauer) expected["cover_half_edges"] = e.cover_half_edges;
    expected["cover_vertices"] = e.cover_vertices;
    expected["cover_edges"] = e.cover_edges;
  }
  if (!e.shape.empty()) expected["shape"] = e.shape;
  j["expected"] = expected;
  return j;
}

int cmd_random(int edges, std::int64_t max_multiplicity, std::int64_t order) {
  const auto seed = bc::seed_from_env(0);
  bc::Rng rng(seed);
  const auto b = bc::random_brauer(rng, edges, max_multiplicity);
  const auto group = bc::GroupSpec::cyclic(order);
  const auto w = bc::random_admissible_weight(rng, b, group);
  bc::Json out{{"seed", seed}, {"brauer", bc::to_json(b)}};
  out["weight"] = w ? bc::to_json(*w) : bc::Json(nullptr);
  std::cout << dump(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois coverings of Brauer graph algebras by smash products"};
  app.require_subcommand(1);
  int code = 0;

  std::string input, weight, out, dot, relations, window, kind, other, mode = "ribbon";
  std::string delete_out = "B_W.json";
  std::optional<int> depth;
  bool apply = false, json = false;

  auto* validate = app.add_subcommand("validate", "check a Brauer permutation");
  validate->add_option("input", input, "JSON file or fixture id")->required();
  validate->callback([&] { code = cmd_validate(input); });

  auto* graph = app.add_subcommand("graph", "the Brauer graph");
  graph->add_option("input", input, "JSON file or fixture id")->required();
  graph->add_option("--dot", dot, "write DOT to this file ('-' for stdout)");
  graph->callback([&] { code = cmd_graph(input, dot); });

  auto* quiver = app.add_subcommand("quiver", "the bound Brauer quiver");
  quiver->add_option("input", input, "JSON file or fixture id")->required();
  quiver->add_option("--dot", dot, "write DOT to this file");
  quiver->add_option("--relations", relations, "write the relations listing to this file");
  quiver->callback([&] { code = cmd_quiver(input, dot, relations); });

  auto* smash = app.add_subcommand("smash", "the covering Brauer permutation B_W");
  smash->add_option("input", input, "JSON file or fixture id")->required();
  smash->add_option("--weight", weight, "weight JSON file or fixture id");
  smash->add_option("--depth", depth, "window depth for infinite groups");
  smash->add_option("--out", out, "write the covering JSON here instead of stdout");
  smash->add_option("--dot", dot, "write the covering graph as DOT");
  smash->callback([&] { code = cmd_smash(input, weight, depth, out, dot); });

  auto* smash_quiver = app.add_subcommand("smash-quiver", "the covering of a bound quiver");
  smash_quiver->add_option("input", input, "quiver JSON file or fixture id")->required();
  smash_quiver->add_option("--weight", weight, "weight JSON file or fixture id");
  smash_quiver->add_option("--window", window, "comma-separated group elements, e.g. \"a^-1,1,a\"");
  smash_quiver->add_option("--out", out, "write the covering JSON here instead of stdout");
  smash_quiver->add_option("--dot", dot, "write the covering quiver as DOT");
  smash_quiver->callback([&] { code = cmd_smash_quiver(input, weight, window, out, dot); });

  auto* del = app.add_subcommand("delete", "build a deletion plan");
  del->add_option("kind", kind, "multiplicity|loops|multiedges|multiedges-tree|cycles")->required();
  del->add_option("input", input, "JSON file or fixture id")->required();
  del->add_flag("--apply", apply, "also build the covering and check the plan");
  del->add_option("--depth", depth, "window depth for infinite groups");
  del->add_option("--out", delete_out, "where --apply writes the covering (default B_W.json)");
  del->add_flag("--json", json, "print the plan as JSON");
  del->callback([&] { code = cmd_delete(kind, input, apply, depth, delete_out, json); });

  auto* check = app.add_subcommand("check-covering", "verify the covering and the quiver presentation");
  check->add_option("input", input, "JSON file or fixture id")->required();
  check->add_option("--weight", weight, "weight JSON file or fixture id");
  check->add_option("--depth", depth, "window depth for infinite groups");
  check->add_option("--window", window, "explicit window for quiver inputs");
  check->callback([&] { code = cmd_check_covering(input, weight, depth, window); });

  auto* iso = app.add_subcommand("iso", "compare two Brauer permutations");
  iso->add_option("x", input, "JSON file or fixture id")->required();
  iso->add_option("y", other, "JSON file or fixture id")->required();
  iso->add_option("--mode", mode, "ribbon or graph")->check(CLI::IsMember({"ribbon", "graph"}));
  iso->callback([&] { code = cmd_iso(input, other, mode); });

  auto* fix = app.add_subcommand("fixtures", "the shipped examples");
  fix->require_subcommand(1);
  fix->add_subcommand("list", "list fixture ids")->callback([&] {
    for (const auto& f : bc::fixtures()) std::cout << f.id << "  " << f.description << "\n";
  });
  auto* show = fix->add_subcommand("show", "print one fixture");
  show->add_option("id", input, "fixture id")->required();
  show->callback([&] {
    const auto* f = bc::find_fixture(input);
    if (f == nullptr) throw bc::Error(bc::ErrorCode::MalformedInput, "unknown fixture", input);
    std::cout << dump(fixture_json(*f));
  });

  int edges = 4;
  std::int64_t max_multiplicity = 1, order = 2;
  auto* random = app.add_subcommand("random", "a random Brauer permutation with an admissible cyclic weight");
  random->add_option("--edges", edges, "number of edges")->check(CLI::Range(1, 64));
  random->add_option("--max-multiplicity", max_multiplicity, "largest multiplicity")->check(CLI::Range(1, 64));
  random->add_option("--order", order, "order of the cyclic group")->check(CLI::Range(1, 10000));
  random->callback([&] { code = cmd_random(edges, max_multiplicity, order); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const bc::Error& e) {
    std::cerr << bc::to_json(e).dump() << "\n";
    const bool malformed = e.code() == bc::ErrorCode::MalformedInput || e.code() == bc::ErrorCode::MalformedWord;
    return malformed ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << bc::Json{{"error", "Internal"}, {"message", e.what()}, {"witness", nullptr}}.dump() << "\n";
    return 1;
  }
  return code;
}
