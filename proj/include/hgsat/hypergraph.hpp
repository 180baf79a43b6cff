#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgsat/graph.hpp"

namespace hgsat {

namespace detail {

/// Visit all k-subsets of items in lexicographic order; fn returns false to stop.
inline void for_each_subset(const std::vector<int>& items, int k,
                            const std::function<bool(const std::vector<int>&)>& fn) {
    const int n = static_cast<int>(items.size());
    if (k < 0 || k > n) return;
    std::vector<int> cur(k);
    std::function<bool(int, int)> rec = [&](int pos, int from) -> bool {
        if (pos == k) return fn(cur);
        for (int i = from; i <= n - (k - pos); ++i) {
            cur[pos] = items[i];
            if (!rec(pos + 1, i + 1)) return false;
        }
        return true;
    };
    rec(0, 0);
}

inline std::vector<int> range_vec(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

} // namespace detail

/// r-uniform hypergraph on labeled vertices 0..n-1. Edges are stored with
/// vertices ascending and the edge list in ascending lexicographic order, so
/// equal hypergraphs are bit-exact equal.
struct Hypergraph {
    int r = 2;
    int n = 0;
    std::vector<std::vector<int>> edges;

    Hypergraph() = default;

    /// Canonicalizes and validates; duplicate input edges collapse. Uniformity
    /// r = 1 is allowed so shadows and links stay closed under the operations.
    Hypergraph(int r_, int n_, std::vector<std::vector<int>> edge_list) : r(r_), n(n_) {
        if (r < 1) throw std::invalid_argument("uniformity must be >= 1");
        if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
        for (auto& e : edge_list) {
            std::vector<int> orig = e;
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
            if (static_cast<int>(e.size()) != r)
                throw std::invalid_argument("edge " + detail::set_str(orig) + ": has " +
                                            std::to_string(e.size()) +
                                            " distinct vertices, expected " + std::to_string(r));
            for (int v : e)
                if (v < 0 || v >= n)
                    throw std::invalid_argument("edge " + detail::set_str(orig) + ": vertex " +
                                                std::to_string(v) + " out of range (n=" +
                                                std::to_string(n) + ")");
        }
        std::sort(edge_list.begin(), edge_list.end());
        edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
        edges = std::move(edge_list);
    }

    static Hypergraph empty(int r_, int n_) { return Hypergraph(r_, n_, {}); }

    long long edge_count() const { return static_cast<long long>(edges.size()); }

    bool has_edge(const std::vector<int>& e) const {
        std::vector<int> s = e;
        std::sort(s.begin(), s.end());
        return std::binary_search(edges.begin(), edges.end(), s);
    }

    bool operator==(const Hypergraph& o) const = default;
};

/// Strict construction surface: uniformity at least 2 as in the on-disk format.
inline Hypergraph make_hypergraph(int r, int n, const std::vector<std::vector<int>>& edge_list) {
    if (r < 2) throw std::invalid_argument("uniformity must be >= 2");
    return Hypergraph(r, n, edge_list);
}

/// i-th shadow: all (r-i)-subsets contained in some edge, 1 <= i <= r-1.
inline Hypergraph shadow(const Hypergraph& h, int i) {
    if (i < 1 || i > h.r - 1)
        throw std::invalid_argument("shadow index " + std::to_string(i) +
                                    " out of range [1," + std::to_string(h.r - 1) + "]");
    std::set<std::vector<int>> out;
    for (const auto& e : h.edges)
        detail::for_each_subset(e, h.r - i, [&](const std::vector<int>& s) {
            out.insert(s);
            return true;
        });
    return Hypergraph(h.r - i, h.n,
                      std::vector<std::vector<int>>(out.begin(), out.end()));
}

/// The pair-cover graph: shadow_{r-2} for r >= 3, the graph itself for r = 2.
inline Graph pair_shadow(const Hypergraph& h) {
    Graph g(h.n);
    for (const auto& e : h.edges)
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) g.add_edge(e[i], e[j]);
    return g;
}

/// Link of v: the (r-1)-graph { A : A + v is an edge }.
inline Hypergraph link(const Hypergraph& h, int v) {
    if (v < 0 || v >= h.n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range (n=" +
                                    std::to_string(h.n) + ")");
    std::vector<std::vector<int>> out;
    for (const auto& e : h.edges) {
        if (!std::binary_search(e.begin(), e.end(), v)) continue;
        std::vector<int> rest;
        rest.reserve(e.size() - 1);
        for (int u : e)
            if (u != v) rest.push_back(u);
        out.push_back(std::move(rest));
    }
    return Hypergraph(h.r - 1, h.n, out);
}

inline long long degree(const Hypergraph& h, int v) {
    if (v < 0 || v >= h.n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range (n=" +
                                    std::to_string(h.n) + ")");
    long long d = 0;
    for (const auto& e : h.edges)
        if (std::binary_search(e.begin(), e.end(), v)) ++d;
    return d;
}

inline long long min_degree(const Hypergraph& h) {
    if (h.n == 0) return 0;
    long long d = -1;
    for (int v = 0; v < h.n; ++v) {
        long long dv = degree(h, v);
        if (d < 0 || dv < d) d = dv;
    }
    return d;
}

/// Containment counts of every covered (r-1)-set; min_positive is the minimum
/// positive co-degree, absent for an edgeless hypergraph.
struct CodegreeProfile {
    std::map<std::vector<int>, long long> pairs;
    std::optional<long long> min_positive;
};

inline CodegreeProfile codegree_profile(const Hypergraph& h) {
    CodegreeProfile p;
    for (const auto& e : h.edges)
        detail::for_each_subset(e, h.r - 1, [&](const std::vector<int>& s) {
            ++p.pairs[s];
            return true;
        });
    for (const auto& [k, c] : p.pairs) {
        (void)k;
        if (!p.min_positive || c < *p.min_positive) p.min_positive = c;
    }
    return p;
}

/// Co-degree of one (r-1)-set (0 when uncovered).
inline long long codegree(const Hypergraph& h, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    long long c = 0;
    for (const auto& e : h.edges)
        if (std::includes(e.begin(), e.end(), s.begin(), s.end())) ++c;
    return c;
}

/// Witness partition into at most l classes such that no edge meets a class
/// twice, or absent. Works through the pair-cover graph: the hypergraph is
/// l-partite exactly when its pair shadow is properly l-colorable.
inline std::optional<Partition> is_l_partite(const Hypergraph& h, int l) {
    if (l < 1) throw std::invalid_argument("is_l_partite: l must be >= 1");
    return proper_coloring(pair_shadow(h), l);
}

inline Graph hypergraph_to_graph(const Hypergraph& h) {
    if (h.r != 2) throw std::invalid_argument("hypergraph_to_graph: uniformity must be 2");
    Graph g(h.n);
    for (const auto& e : h.edges) g.add_edge(e[0], e[1]);
    return g;
}

inline Hypergraph graph_to_hypergraph(const Graph& g) {
    std::vector<std::vector<int>> es;
    for (auto [u, v] : g.edges()) es.push_back({u, v});
    return Hypergraph(2, g.order(), es);
}

} // namespace hgsat
