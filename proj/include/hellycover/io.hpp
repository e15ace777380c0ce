#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "hellycover/graphs.hpp"
#include "hellycover/hypergraph.hpp"

namespace hellycover {

// Hypergraph text format:
//   n=<int> r=<int|_> multi=<0|1>
//   parts=0,1;2,3          (optional)
//   0,1
//   2,3
// JSON mirror {n, r, multi, parts, edges} is the canonical machine format;
// r and parts are null when absent.

struct HypergraphFile {
    Hypergraph h;
    std::optional<PartiteStructure> parts;
};

std::string to_text(const HypergraphFile& f);
std::string to_json_string(const HypergraphFile& f);
nlohmann::json to_json(const HypergraphFile& f);
HypergraphFile hypergraph_from_json(const nlohmann::json& j);
HypergraphFile hypergraph_from_text(const std::string& text);

// auto-detects JSON ('{' first) vs text
HypergraphFile read_hypergraph_file(const std::string& path);
void write_hypergraph_file(const std::string& path, const HypergraphFile& f, bool json);

// Coloured graph JSON: {n, r, multi, edges: [[u, v, colour], ...]}
nlohmann::json to_json(const ColouredGraph& g);
ColouredGraph coloured_graph_from_json(const nlohmann::json& j);
ColouredGraph read_coloured_graph_file(const std::string& path);
void write_coloured_graph_file(const std::string& path, const ColouredGraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// FNV-1a, 64-bit, as 16 hex digits; used for manifest digests.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace hellycover
