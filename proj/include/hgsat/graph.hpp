#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hgsat/bitset.hpp"

namespace hgsat {

namespace detail {

inline std::string set_str(const std::vector<int>& e) {
    std::string s = "{";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(e[i]);
    }
    return s + "}";
}

} // namespace detail

/// Ordered list of disjoint vertex classes. Witnesses l-partiteness and
/// carries the class labels of generated graphs.
struct Partition {
    std::vector<std::vector<int>> classes;

    /// Sort members within classes, drop empties, order classes by least member.
    void normalize() {
        for (auto& c : classes) std::sort(c.begin(), c.end());
        classes.erase(std::remove_if(classes.begin(), classes.end(),
                                     [](const std::vector<int>& c) { return c.empty(); }),
                      classes.end());
        std::sort(classes.begin(), classes.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      return a.front() < b.front();
                  });
    }

    int class_of(int v) const {
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (int u : classes[i])
                if (u == v) return static_cast<int>(i);
        return -1;
    }

    int total() const {
        int t = 0;
        for (auto& c : classes) t += static_cast<int>(c.size());
        return t;
    }
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {
        if (n < 0) throw std::invalid_argument("graph with negative order");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
        Graph g(n);
        for (auto [u, v] : es) g.add_edge(u, v);
        return g;
    }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    static Graph complete_multipartite(const std::vector<int>& part_sizes) {
        int n = 0;
        for (int s : part_sizes) n += s;
        Graph g(n);
        int off_u = 0;
        for (std::size_t i = 0; i < part_sizes.size(); ++i) {
            int off_v = off_u + part_sizes[i];
            for (std::size_t j = i + 1; j < part_sizes.size(); ++j) {
                for (int u = off_u; u < off_u + part_sizes[i]; ++u)
                    for (int v = off_v; v < off_v + part_sizes[j]; ++v) g.add_edge(u, v);
                off_v += part_sizes[j];
            }
            off_u += part_sizes[i];
        }
        return g;
    }

    int order() const { return n_; }
    long long size() const { return m_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " out of range (n=" + std::to_string(n_) + ")");
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge rejected");
        if (adj_[u].test(v)) return;
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    void remove_edge(int u, int v) {
        if (!has_edge(u, v)) return;
        adj_[u].reset(v);
        adj_[v].reset(u);
        --m_;
    }

    const Bitset& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }

    int min_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = v == 0 ? degree(v) : std::min(d, degree(v));
        return n_ == 0 ? 0 : d;
    }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    /// Edges in lexicographic order (u < v).
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
                out.emplace_back(u, v);
        return out;
    }

    /// Induced subgraph on the given vertices (relabeled 0..k-1 in list order).
    Graph induced(const std::vector<int>& verts) const {
        Graph g(static_cast<int>(verts.size()));
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (has_edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        return g;
    }

    Graph complement() const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!adj_[u].test(v)) g.add_edge(u, v);
        return g;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
};

/// Removal order by repeatedly deleting a minimum-degree vertex (ties: lowest
/// index). Standard peel used to orient the clique enumeration.
inline std::vector<int> degeneracy_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg(n), order;
    std::vector<bool> gone(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
        gone[best] = true;
        order.push_back(best);
        const Bitset& nb = g.neighbors(best);
        for (int u = nb.next(0); u >= 0; u = nb.next(u + 1))
            if (!gone[u]) --deg[u];
    }
    return order;
}

/// Proper coloring of g with at most l classes by exhaustive backtracking.
/// Vertices are tried in descending-degree order (ties: lowest index) and a
/// vertex may only open the next unused color, which breaks color symmetry.
inline std::optional<Partition> proper_coloring(const Graph& g, int l) {
    if (l < 1) throw std::invalid_argument("proper_coloring: l must be >= 1");
    const int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });

    std::vector<Bitset> cls(l, Bitset(n));
    std::vector<int> color(n, -1);
    std::function<bool(int, int)> rec = [&](int pos, int used) -> bool {
        if (pos == n) return true;
        int v = order[pos];
        int cap = std::min(l, used + 1);
        for (int c = 0; c < cap; ++c) {
            if (g.neighbors(v).intersects(cls[c])) continue;
            cls[c].set(v);
            color[v] = c;
            if (rec(pos + 1, std::max(used, c + 1))) return true;
            cls[c].reset(v);
            color[v] = -1;
        }
        return false;
    };
    if (!rec(0, 0)) return std::nullopt;

    Partition p;
    p.classes.assign(l, {});
    for (int v = 0; v < n; ++v) p.classes[color[v]].push_back(v);
    p.normalize();
    return p;
}

/// Class structure of a complete multipartite graph (non-adjacency must be
/// transitive), or absent. The empty graph on n >= 1 vertices is complete
/// 1-partite; n = 0 yields an empty partition.
inline std::optional<Partition> complete_multipartite_parts(const Graph& g) {
    const int n = g.order();
    std::vector<int> cls(n, -1);
    int k = 0;
    for (int v = 0; v < n; ++v) {
        if (cls[v] >= 0) continue;
        cls[v] = k;
        for (int u = v + 1; u < n; ++u)
            if (cls[u] < 0 && !g.has_edge(v, u)) cls[u] = k;
        ++k;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v) == (cls[u] == cls[v])) return std::nullopt;
    Partition p;
    p.classes.assign(k, {});
    for (int v = 0; v < n; ++v) p.classes[cls[v]].push_back(v);
    p.normalize();
    return p;
}

} // namespace hgsat
