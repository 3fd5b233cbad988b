#pragma once

#include "br/coloring.hpp"
#include "br/graph.hpp"
#include "br/partite.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace br {

struct ParseError : std::runtime_error {
    std::size_t byte_offset;
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"), byte_offset(offset) {}
};

// graph6: 6 bits per byte, offset 63, upper triangle in column order.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// {"n": int, "edges": [[u,v], ...]}
Graph parse_graph_json(const nlohmann::json& j);
nlohmann::json emit_graph_json(const Graph& g);

// Accepts graph6 or the JSON edge-list, keyed on the leading character.
Graph parse_graph_auto(const std::string& text);

// Reads a graph from a file; ".json" suffix selects JSON, otherwise graph6.
Graph load_graph_file(const std::string& path);

// Embedding certificates: array of {pattern_vertex, copy_index, host_vertex}.
nlohmann::json emit_embedding_json(const VertexMap& map);
VertexMap parse_embedding_json(const nlohmann::json& j);

// Coloring certificates carry the host edge list so they re-verify standalone.
nlohmann::json emit_coloring_json(const EdgeColoring& coloring);
EdgeColoring parse_coloring_json(const nlohmann::json& j);

// Partite graphs as {"n":int,"edges":[...],"parts":[[...],...]}.
nlohmann::json emit_partite_json(const PartiteGraph& pg);
PartiteGraph parse_partite_json(const nlohmann::json& j);

} // namespace br
