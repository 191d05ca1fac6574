#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "graphmax/constants.hpp"
#include "graphmax/graph.hpp"
#include "graphmax/maxop.hpp"
#include "graphmax/search.hpp"
#include "graphmax/verify.hpp"

namespace graphmax {

/// Object keys keep insertion order so emitted documents are stable.
using Json = nlohmann::ordered_json;

/// Rounds to `digits` significant decimal digits; output documents carry
/// 12 so golden-file diffs stay meaningful.
double round_significant(double x, int digits = 12);

/// {"n": <int>, "edges": [[i, j], ...]} with canonical edges (i < j, sorted).
Json to_json(const Graph& g);
/// Accepts edges in any order or orientation; throws FormatError on a
/// schema violation and GraphError on invalid vertices.
Graph graph_from_json(const Json& doc);

/// {"values": [x0, x1, ...]}
Json to_json(const VertexFunction& f);
VertexFunction vertex_function_from_json(const Json& doc);

/// {"value": <float|null>, "status": "...", "source": "...", "note": "..."}
Json to_json(const ConstantResult& c);

/// Numbers, or the string "inf".
Json to_json(PExponent p);

Json to_json(const SearchConfig& cfg);
Json to_json(const SearchReport& report);
Json to_json(const ScanRow& row);
Json to_json(const ProbeRow& row);
Json to_json(const Report& report);

/// Flat CSV projection of report entries with a header line.
std::string report_to_csv(const Report& report);

/// Two-space indented, newline terminated.
std::string dump(const Json& doc);

/// Throws IoError when the file cannot be read, FormatError on bad JSON.
Json read_json_file(const std::filesystem::path& path);
/// Throws IoError when the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace graphmax
