#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkm/basis_algebra.hpp"
#include "gkm/graph.hpp"
#include "gkm/pid_basis.hpp"
#include "gkm/spline.hpp"

/// JSON documents for rings, graphs, splines, bases, tables and elimination
/// traces. Every reader throws ParseError naming the offending field.
namespace gkm::json_io {

using Json = nlohmann::ordered_json;

/// Reads a file; syntax errors report line and column.
Json load(const std::filesystem::path& path);
Json parse(const std::string& text);

/// Writes through a temporary file and a rename, so readers never see a
/// partially written document.
void save_atomic(const std::filesystem::path& path, const Json& doc);

Json ring_to_json(const Ring& ring);
RingPtr ring_from_json(const Json& j);

/// `{"ring", "vertices", "edges": [{"u","v","label"}], "perm_labels"?, "direction"?}`.
/// A direction, when given, maps edge indices to "uv" or "vu".
Json graph_to_json(const Graph& g, const DirectedGraph* direction = nullptr);
GraphPtr graph_from_json(const Json& j);
/// The "direction" member, if present.
std::optional<DirectedGraph> direction_from_json(const Json& j, const GraphPtr& g);

/// Resolves a `"graph"` member that is either inline or a path relative to `base`.
GraphPtr graph_reference(const Json& j, const std::filesystem::path& base);

/// `{"graph": ..., "values": {vertex: "element"}}`; `graph_doc` is embedded as is.
Json spline_to_json(const Spline& p, const Json& graph_doc);
/// Values with missing or null entries left unknown.
PartialAssignment partial_from_json(const Json& values, const Graph& g);
Spline spline_from_json(const Json& values, const GraphPtr& g);

Json values_to_json(const Graph& g, const std::vector<Element>& values);

/// `{"graph": ..., "elements": [{"leading": vertex, "values": {...}}]}`.
Json basis_to_json(const FlowUpBasis& b, const Json& graph_doc);
FlowUpBasis basis_from_json(const Json& j, const GraphPtr& g);

/// `{"pairs": [{"a", "b", "terms": [{"c", "coeff"}]}]}` over unordered pairs a <= b.
Json table_to_json(const StructureTable& t);

/// Array of elimination steps followed by the base tree.
Json trace_to_json(const EliminationTrace& trace);

}  // namespace gkm::json_io
