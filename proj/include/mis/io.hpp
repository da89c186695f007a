#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "mis/graph.hpp"

namespace mis {

enum class GraphFormat { dimacs, edgelist };

inline const char* format_name(GraphFormat f) {
    return f == GraphFormat::dimacs ? "dimacs" : "edgelist";
}

namespace detail {

inline bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

}  // namespace detail

// DIMACS: `c` comments, one `p edge <n> <m>` header, `e <u> <v>` lines with
// 1-based ids. Duplicate edges collapse silently; self-loops are rejected.
inline Graph parse_dimacs(std::istream& in) {
    std::string line;
    long lineno = 0;
    bool have_header = false;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string kind;
        if (!(ss >> kind)) continue;  // blank line
        if (kind == "c") continue;
        if (kind == "p") {
            std::string tag;
            long long n = -1, m = -1;
            std::string u_tok, v_tok, extra;
            if (!(ss >> tag >> u_tok >> v_tok) || tag != "edge" || !detail::parse_int(u_tok, n) ||
                !detail::parse_int(v_tok, m) || n < 0 || m < 0 || (ss >> extra))
                throw ParseError("malformed problem line", lineno);
            if (have_header) throw ParseError("duplicate problem line", lineno);
            have_header = true;
            g = Graph(static_cast<int>(n));
        } else if (kind == "e") {
            if (!have_header) throw ParseError("edge before problem line", lineno);
            std::string u_tok, v_tok, extra;
            long long u = 0, v = 0;
            if (!(ss >> u_tok >> v_tok) || !detail::parse_int(u_tok, u) ||
                !detail::parse_int(v_tok, v) || (ss >> extra))
                throw ParseError("malformed edge line", lineno);
            if (u < 1 || u > g.n() || v < 1 || v > g.n())
                throw ParseError("edge endpoint out of range", lineno);
            if (u == v) throw ParseError("self-loop rejected", lineno);
            g.add_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
        } else {
            throw ParseError("unrecognized line kind '" + kind + "'", lineno);
        }
    }
    if (!have_header) throw ParseError("missing problem line", lineno);
    return g;
}

// Edgelist: one `u v` pair per line, 0-based, vertex count inferred. An empty
// file is the 0-vertex graph. Trailing isolated vertices are not
// representable in this format.
inline Graph parse_edgelist(std::istream& in) {
    std::string line;
    long lineno = 0;
    std::vector<std::pair<int, int>> edges;
    long long max_id = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string u_tok, v_tok, extra;
        if (!(ss >> u_tok)) continue;  // blank line
        long long u = 0, v = 0;
        if (!(ss >> v_tok) || !detail::parse_int(u_tok, u) || !detail::parse_int(v_tok, v) ||
            u < 0 || v < 0 || (ss >> extra))
            throw ParseError("malformed edge line", lineno);
        if (u == v) throw ParseError("self-loop rejected", lineno);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max({max_id, u, v});
    }
    Graph g(static_cast<int>(max_id + 1));
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline Graph parse_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::dimacs ? parse_dimacs(in) : parse_edgelist(in);
}

inline Graph parse_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_graph(in, format);
}

// Canonical serialization: edges sorted, no comments, so a parse/serialize
// round trip is byte-identical.
inline std::string serialize_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    auto edges = g.edges();  // already sorted lexicographically
    if (format == GraphFormat::dimacs) {
        out << "p edge " << g.n() << " " << edges.size() << "\n";
        for (auto [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
    } else {
        for (auto [u, v] : edges) out << u << " " << v << "\n";
    }
    return out.str();
}

inline void write_graph_file(const Graph& g, const std::string& path, GraphFormat format) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << serialize_graph(g, format);
}

}  // namespace mis
