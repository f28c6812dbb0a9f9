#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "brauer_cover/brauer.hpp"
#include "brauer_cover/deletions.hpp"
#include "brauer_cover/error.hpp"
#include "brauer_cover/groups.hpp"
#include "brauer_cover/quiver.hpp"
#include "brauer_cover/smash.hpp"
#include "brauer_cover/weights.hpp"

namespace brauer_cover {

using Json = nlohmann::ordered_json;

// Parsers throw Error(MalformedInput) on schema violations and the domain
// errors of the underlying constructors otherwise.

Json to_json(const GroupSpec& group);
GroupSpec group_from_json(const Json& j);

Json to_json(const BrauerPermutation& b);
BrauerPermutationData brauer_data_from_json(const Json& j);
BrauerPermutation brauer_from_json(const Json& j);

/// {"group": ..., "values": {key: word}}; every key is written.
Json to_json(const GWeight& w);
/// Keys missing from "values" default to the identity of the group.
GWeight weight_from_json(const Json& j, const std::vector<std::string>& domain);
GWeight weight_from_json(const Json& j, const BrauerPermutation& b);
GWeight weight_from_json(const Json& j, const BoundQuiver& q);

/// Paths are arrow-name lists in application order (first arrow first).
Json to_json(const BoundQuiver& q);
BoundQuiver quiver_from_json(const Json& j);

/// Brauer schema with null tau entries on the frontier, plus "group",
/// "frontier", "complete" and, for windows, "depth".
Json to_json(const WindowedBrauerPermutation& b);
/// Quiver schema plus "group", "layers" and "frontier" vertex names.
Json to_json(const CoveringQuiver& cov);

Json to_json(const DeletionPlan& plan);
DeletionPlan plan_from_json(const Json& j, const BrauerPermutation& b);

Json to_json(const BrauerGraph& graph);
BrauerGraph brauer_graph_from_json(const Json& j);
Json to_json(const GraphClassification& c);
Json to_json(const CoveringReport& report);
Json to_json(const CrossValidation& result);
Json to_json(const PostCheck& check);

Json to_json(const Error& error);

/// Undirected multigraph; vertex label "name (m)" with "(1)" omitted.
/// Dangling half edges and their vertices are dashed.
std::string graph_dot(const BrauerGraph& graph, std::string_view name = "brauer_graph");
/// Digraph; a comment block lists the relations when there are any.
std::string quiver_dot(const BoundQuiver& q, std::string_view name = "bound_quiver",
                       const std::vector<bool>& frontier = {});
std::string quiver_dot(const CoveringQuiver& cov, std::string_view name = "covering_quiver");
/// One relation generator per line.
std::string relations_text(const BoundQuiver& q);

/// Reads a whole file as JSON. Throws Error(MalformedInput).
Json read_json_file(const std::string& path);

}  // namespace brauer_cover
