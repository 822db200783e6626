#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "zaran/core.hpp"

namespace zaran::io {

using nlohmann::json;

// Document <-> model. The *_from_json functions throw ParseError for
// structural problems and ValidationError (with a field path) for
// out-of-range content.

json to_json(const BicliqueFamily& family);
json to_json(const BipartiteGraph& graph);
json to_json(const LayeredGraph& graph);

BicliqueFamily family_from_json(const json& doc);
BipartiteGraph graph_from_json(const json& doc);
LayeredGraph layered_from_json(const json& doc);

json read_json_file(const std::filesystem::path& path);
/// Pretty-printed (2-space indent) with a trailing newline.
void write_json_file(const std::filesystem::path& path, const json& doc);

BicliqueFamily load_family(const std::filesystem::path& path);
BipartiteGraph load_graph(const std::filesystem::path& path);
LayeredGraph load_layered(const std::filesystem::path& path);

void save(const std::filesystem::path& path, const BicliqueFamily& family);
void save(const std::filesystem::path& path, const BipartiteGraph& graph);
void save(const std::filesystem::path& path, const LayeredGraph& graph);

}  // namespace zaran::io
