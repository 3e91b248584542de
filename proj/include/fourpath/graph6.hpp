#ifndef FOURPATH_GRAPH6_HPP
#define FOURPATH_GRAPH6_HPP

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fourpath/errors.hpp"
#include "fourpath/graph.hpp"

namespace fourpath {

// graph6: the de-facto standard line format for undirected simple graphs.
// Vertex count first (one byte n+63 for n <= 62, '~' + 18 bits for larger),
// then the upper triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ...
// packed into 6-bit groups, each +63. Writer never emits the optional
// ">>graph6<<" header; the reader tolerates it.

inline std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw Error("graph6: empty line");

    size_t pos = 0;
    auto next_byte = [&]() -> int {
        if (pos >= line.size()) throw Error("graph6: truncated line");
        int c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126) throw Error("graph6: byte " + std::to_string(c) + " outside 63..126");
        return c - 63;
    };

    int n;
    int first = next_byte();
    if (first < 63) {
        n = first;
    } else {
        if (pos < line.size() && static_cast<unsigned char>(line[pos]) == 126)
            throw CapError("graph6: vertex counts beyond 258047 are unsupported");
        int a = next_byte(), b = next_byte(), c = next_byte();
        n = (a << 12) | (b << 6) | c;
    }
    if (n > VertexSet::kMaxVertices)
        throw CapError("graph6: graph with " + std::to_string(n) + " vertices exceeds the " +
                       std::to_string(VertexSet::kMaxVertices) + "-vertex cap");

    std::vector<std::pair<int, int>> edges;
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next_byte();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) edges.emplace_back(i, j);
            --nbits;
        }
    if (pos != line.size()) throw Error("graph6: trailing bytes after edge data");
    return Graph::from_edges(n, edges);
}

// Plain text edge list: first line "n m", then m lines "u v", all 1-based.
inline std::string to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

inline Graph from_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    int n, m;
    if (!(in >> n >> m)) throw Error("edge list: missing \"n m\" header line");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw Error("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        edges.emplace_back(u - 1, v - 1);
    }
    return Graph::from_edges(n, edges);
}

struct Graph6Diagnostic {
    int line_number;  // 1-based
    std::string message;
};

// One graph per line. In lenient mode malformed lines are collected in
// `diagnostics` and skipped; in strict mode the first one throws.
inline std::vector<Graph> read_graph6_stream(std::istream& in, bool strict,
                                             std::vector<Graph6Diagnostic>* diagnostics = nullptr) {
    std::vector<Graph> out;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::string_view sv = line;
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == '\n')) sv.remove_suffix(1);
        if (sv.empty()) continue;
        try {
            out.push_back(from_graph6(sv));
        } catch (const Error& e) {
            if (strict) throw Error("line " + std::to_string(line_number) + ": " + e.what());
            if (diagnostics) diagnostics->push_back({line_number, e.what()});
        }
    }
    return out;
}

}  // namespace fourpath

#endif
