#include "br/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace br {

namespace {

// graph6 upper-triangle bit order: x(0,1), x(0,2), x(1,2), x(0,3), ...
constexpr int kOffset = 63;

} // namespace

Graph parse_graph6(const std::string& text) {
    // Strip an optional ">>graph6<<" header and trailing newline.
    std::string s = text;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw ParseError("empty graph6 string", 0);

    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= s.size()) throw ParseError("truncated graph6 string", i);
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", i);
        return c - kOffset;
    };

    long long n;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else {
        if (byte(1) < 63) {
            n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
            pos = 4;
        } else {
            n = 0;
            for (int i = 2; i < 8; ++i) n = (n << 6) | byte(i);
            pos = 8;
        }
    }
    if (n > 4096) throw ParseError("graph too large", 0);

    Graph g(static_cast<int>(n));
    int bits_needed = static_cast<int>(n * (n - 1) / 2);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int b = byte(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    std::size_t expected = pos + (bits_needed + 5) / 6;
    if (s.size() != expected) throw ParseError("trailing bytes in graph6 string", expected);
    return g;
}

std::string emit_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
        out.push_back(static_cast<char>((n & 63) + kOffset));
    }
    int bit = 0, acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                bit = 0;
                acc = 0;
            }
        }
    }
    if (bit) out.push_back(static_cast<char>((acc << (6 - bit)) + kOffset));
    return out;
}

Graph parse_graph_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs {\"n\", \"edges\"}");
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [u, v]");
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return g;
}

nlohmann::json emit_graph_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph parse_graph_auto(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '{') return parse_graph_json(nlohmann::json::parse(text));
    return parse_graph6(text);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return parse_graph_json(nlohmann::json::parse(ss.str()));
    return parse_graph_auto(ss.str());
}

nlohmann::json emit_embedding_json(const VertexMap& map) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < map.pattern_n; ++i)
        for (int c = 0; c < map.t; ++c)
            entries.push_back({{"pattern_vertex", i}, {"copy_index", c}, {"host_vertex", map.at(i, c)}});
    return {{"kind", "embedding"}, {"pattern_n", map.pattern_n}, {"t", map.t}, {"entries", entries}};
}

VertexMap parse_embedding_json(const nlohmann::json& j) {
    if (j.value("kind", "") != "embedding") throw std::invalid_argument("not an embedding certificate");
    VertexMap map;
    map.pattern_n = j.at("pattern_n").get<int>();
    map.t = j.at("t").get<int>();
    if (map.pattern_n < 0 || map.t < 1) throw std::invalid_argument("bad embedding dimensions");
    map.host.assign(static_cast<std::size_t>(map.pattern_n) * map.t, -1);
    for (const auto& e : j.at("entries")) {
        int i = e.at("pattern_vertex").get<int>();
        int c = e.at("copy_index").get<int>();
        if (i < 0 || i >= map.pattern_n || c < 0 || c >= map.t)
            throw std::invalid_argument("embedding entry out of range");
        map.at(i, c) = e.at("host_vertex").get<int>();
    }
    return map;
}

nlohmann::json emit_coloring_json(const EdgeColoring& coloring) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : coloring.edges()) edges.push_back({u, v});
    return {{"kind", "coloring"},
            {"n", coloring.vertex_count()},
            {"r", coloring.color_count()},
            {"edges", edges},
            {"colors", coloring.colors()}};
}

EdgeColoring parse_coloring_json(const nlohmann::json& j) {
    if (j.value("kind", "") != "coloring") throw std::invalid_argument("not a coloring certificate");
    Graph host(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) host.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    EdgeColoring coloring(host, j.at("r").get<int>());
    auto colors = j.at("colors").get<std::vector<int>>();
    // The host edge list re-sorts, so stated edges must be in sorted order for
    // the color array to line up; enforce rather than silently permute.
    auto sorted = host.edges();
    std::size_t idx = 0;
    for (const auto& e : j.at("edges")) {
        if (sorted[idx] != std::make_pair(std::min(e.at(0).get<int>(), e.at(1).get<int>()),
                                          std::max(e.at(0).get<int>(), e.at(1).get<int>())))
            throw std::invalid_argument("coloring edge list must be sorted by (u, v)");
        ++idx;
    }
    coloring.set_colors(std::move(colors));
    return coloring;
}

nlohmann::json emit_partite_json(const PartiteGraph& pg) {
    nlohmann::json j = emit_graph_json(pg.g);
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : pg.parts) parts.push_back(p);
    j["parts"] = parts;
    return j;
}

PartiteGraph parse_partite_json(const nlohmann::json& j) {
    Graph g = parse_graph_json(j);
    std::vector<std::vector<int>> parts;
    for (const auto& p : j.at("parts")) parts.push_back(p.get<std::vector<int>>());
    return PartiteGraph(std::move(g), std::move(parts));
}

} // namespace br
