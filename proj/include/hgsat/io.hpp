#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgsat/graph.hpp"
#include "hgsat/hypergraph.hpp"

namespace hgsat {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads the flat hypergraph format: optional comment lines starting with
/// 'c', one header 'p hgr <r> <n> <m>', then m edge lines of r vertices,
/// 1-indexed on disk. Input edges may be unordered; the in-memory form is
/// canonical. Errors carry the offending line number.
inline Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int r = -1, n = -1;
    long long m = -1, seen = 0;
    std::vector<std::vector<int>> edges;

    auto err = [&](const std::string& msg) -> ParseError {
        return ParseError("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (r < 0) {
            std::string p, fmt;
            if (!(ls >> p >> fmt >> r >> n >> m) || p != "p" || fmt != "hgr")
                throw err("expected header 'p hgr <r> <n> <m>'");
            if (r < 2) throw err("uniformity must be >= 2");
            if (n < 0 || m < 0) throw err("negative count in header");
            std::string extra;
            if (ls >> extra) throw err("trailing tokens after header");
            continue;
        }
        if (seen == m) throw err("more than " + std::to_string(m) + " edge lines");
        std::vector<int> e;
        long long v;
        while (ls >> v) {
            if (v < 1 || v > n)
                throw err("vertex " + std::to_string(v) + " out of range (n=" +
                          std::to_string(n) + ")");
            e.push_back(static_cast<int>(v - 1));
        }
        if (!ls.eof()) throw err("malformed vertex token");
        if (static_cast<int>(e.size()) != r)
            throw err("expected " + std::to_string(r) + " vertices, got " +
                      std::to_string(e.size()));
        std::vector<int> s = e;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw err("repeated vertex in edge");
        edges.push_back(std::move(e));
        ++seen;
    }
    if (r < 0) throw ParseError("line " + std::to_string(lineno) + ": missing header");
    if (seen != m)
        throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(m) +
                         " edge lines, got " + std::to_string(seen));
    return Hypergraph(r, n, edges);
}

/// Canonical emission: header, then edges ascending within and across lines,
/// 1-indexed, LF endings. emit(parse(t)) normalizes t; emit(parse(emit(h)))
/// is the identity.
inline std::string emit_hypergraph(const Hypergraph& h) {
    std::string out = "p hgr " + std::to_string(h.r) + " " + std::to_string(h.n) + " " +
                      std::to_string(h.edge_count()) + "\n";
    for (const auto& e : h.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(e[i] + 1);
        }
        out += "\n";
    }
    return out;
}

/// DOT rendering of a graph, vertices 1-indexed to match the file format.
inline std::string to_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v + 1) + ";\n";
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u + 1) + " -- " + std::to_string(v + 1) + ";\n";
    out += "}\n";
    return out;
}

/// FNV-1a over the canonical bytes; stable input digest for reports.
inline std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace hgsat
