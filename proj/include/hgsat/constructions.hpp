#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hgsat/cliques.hpp"
#include "hgsat/hypergraph.hpp"
#include "hgsat/rational.hpp"

namespace hgsat {

/// Part sizes of the balanced complete l-partite layout on n vertices,
/// larger parts first, vertices assigned contiguously.
inline Partition turan_parts(int n, int l) {
    if (l < 1 || n < 0) throw std::invalid_argument("turan_parts: need l >= 1, n >= 0");
    Partition p;
    int q = n / l, rem = n % l, v = 0;
    for (int i = 0; i < l; ++i) {
        int sz = q + (i < rem ? 1 : 0);
        std::vector<int> cls(sz);
        std::iota(cls.begin(), cls.end(), v);
        v += sz;
        p.classes.push_back(std::move(cls));
    }
    p.normalize();
    return p;
}

/// T_r(n,l): the complete l-partite r-graph with near-equal parts; edges are
/// all transversal r-sets. Built from the raw part layout so that empty parts
/// (n < l) are handled.
inline Hypergraph turan_hypergraph(int n, int l, int r) {
    if (r < 2 || l < r) throw std::invalid_argument("turan_hypergraph: need l >= r >= 2");
    if (n < 0) throw std::invalid_argument("turan_hypergraph: need n >= 0");
    int q = n / l, rem = n % l, v = 0;
    std::vector<std::vector<int>> parts(l);
    for (int i = 0; i < l; ++i) {
        int sz = q + (i < rem ? 1 : 0);
        parts[i].resize(sz);
        std::iota(parts[i].begin(), parts[i].end(), v);
        v += sz;
    }
    std::vector<std::vector<int>> edges;
    detail::for_each_subset(detail::range_vec(l), r, [&](const std::vector<int>& chosen) {
        for (int i : chosen)
            if (parts[i].empty()) return true;
        std::vector<int> pick(r, 0);
        while (true) {
            std::vector<int> e(r);
            for (int i = 0; i < r; ++i) e[i] = parts[chosen[i]][pick[i]];
            edges.push_back(e);
            int pos = r - 1;
            while (pos >= 0 && ++pick[pos] == static_cast<int>(parts[chosen[pos]].size())) {
                pick[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        return true;
    });
    return Hypergraph(r, n, edges);
}

/// t_r(n,l) as the degree-r elementary symmetric polynomial of the part
/// sizes; exact, no generation.
inline long long turan_count(int n, int l, int r) {
    if (r < 2 || l < r) throw std::invalid_argument("turan_count: need l >= r >= 2");
    Partition parts = turan_parts(n, l);
    std::vector<i128> dp(r + 1, 0);
    dp[0] = 1;
    for (const auto& cls : parts.classes) {
        i128 s = static_cast<i128>(cls.size());
        for (int j = r; j >= 1; --j) dp[j] += dp[j - 1] * s;
    }
    return checked_i64(dp[r], "turan_count");
}

/// Labeled embedding of a 5-wheel-like graph: two (l-1)-cliques q1, q2 meeting
/// in r_set (|r_set| = k), a top vertex joined to both cliques, and a bottom
/// edge whose ends are joined to one clique each.
struct WheelWitness {
    int ell = 0;
    int k = 0;
    int top = -1;
    std::pair<int, int> bottom{-1, -1};
    std::vector<int> q1, q2, r_set;
};

struct WheelGraph {
    Graph graph;
    WheelWitness witness;
};

/// W_{l,k} exactly as defined; no edges beyond the listed ones (in particular
/// no edges between the private clique parts and none from the top to the
/// bottom ends). Layout: r_set, q1 private, q2 private, top, bottom.
inline WheelGraph wheel(int l, int k) {
    if (l < 2 || k < 0 || k > l - 2)
        throw std::invalid_argument("wheel: need l >= 2 and 0 <= k <= l-2");
    const int priv = l - 1 - k;
    const int n = 2 * l - k + 1;
    const int v_top = k + 2 * priv;
    const int v_u1 = v_top + 1;
    const int v_u2 = v_top + 2;
    WheelWitness w;
    w.ell = l;
    w.k = k;
    w.top = v_top;
    w.bottom = {v_u1, v_u2};
    for (int i = 0; i < k; ++i) w.r_set.push_back(i);
    w.q1 = w.r_set;
    for (int i = 0; i < priv; ++i) w.q1.push_back(k + i);
    w.q2 = w.r_set;
    for (int i = 0; i < priv; ++i) w.q2.push_back(k + priv + i);

    Graph g(n);
    auto add_clique = [&](const std::vector<int>& c) {
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) g.add_edge(c[i], c[j]);
    };
    add_clique(w.q1);
    add_clique(w.q2);
    for (int u : w.q1) g.add_edge(v_top, u);
    for (int u : w.q2) g.add_edge(v_top, u);
    for (int u : w.q1) g.add_edge(v_u1, u);
    for (int u : w.q2) g.add_edge(v_u2, u);
    g.add_edge(v_u1, v_u2);
    return {std::move(g), std::move(w)};
}

/// A graph together with its generated class labels.
struct LabeledGraph {
    Graph graph;
    Partition classes;
};

/// Recursive gadget: level 2 is K_{s1,s1}; level t+1 takes s_t disjoint copies
/// of level t, merges their class systems, and joins each new vertex x_p to
/// every vertex of every OTHER copy.
inline LabeledGraph pss_base(int t, const std::vector<int>& sizes) {
    if (t < 2) throw std::invalid_argument("pss_base: need t >= 2");
    if (static_cast<int>(sizes.size()) != t - 1)
        throw std::invalid_argument("pss_base: need exactly t-1 sizes");
    for (int s : sizes)
        if (s < 2) throw std::invalid_argument("pss_base: all sizes must be >= 2");

    if (t == 2) {
        int s1 = sizes[0];
        LabeledGraph out{Graph(2 * s1), {}};
        std::vector<int> a(s1), b(s1);
        for (int i = 0; i < s1; ++i) {
            a[i] = i;
            b[i] = s1 + i;
            for (int j = 0; j < s1; ++j) out.graph.add_edge(i, s1 + j);
        }
        out.classes.classes = {a, b};
        return out;
    }

    LabeledGraph sub = pss_base(t - 1, std::vector<int>(sizes.begin(), sizes.end() - 1));
    const int s = sizes[t - 2];
    const int vs = sub.graph.order();
    const int n = s * vs + s;
    LabeledGraph out{Graph(n), {}};
    out.classes.classes.assign(t, {});
    for (int p = 0; p < s; ++p) {
        int off = p * vs;
        for (auto [u, v] : sub.graph.edges()) out.graph.add_edge(off + u, off + v);
        for (int i = 0; i < t - 1; ++i)
            for (int u : sub.classes.classes[i]) out.classes.classes[i].push_back(off + u);
    }
    for (int p = 0; p < s; ++p) {
        int xp = s * vs + p;
        out.classes.classes[t - 1].push_back(xp);
        for (int q = 0; q < s; ++q) {
            if (q == p) continue;
            for (int u = 0; u < vs; ++u) out.graph.add_edge(xp, q * vs + u);
        }
    }
    out.classes.normalize();
    return out;
}

/// G_{l,s} = G_{l,2s,s,...,s}.
inline LabeledGraph pss_gls(int l, int s) {
    if (l < 2 || s < 2) throw std::invalid_argument("pss_gls: need l >= 2, s >= 2");
    std::vector<int> sizes(l - 1, s);
    sizes[0] = 2 * s;
    return pss_base(l, sizes);
}

struct PSSParams {
    int l = 3;
    int s = 2;
    long long n = 0;
    std::optional<Graph> top_graph;  // overlaid on the apex class, order s
};

/// The n-vertex host graph: s disjoint gadget copies carved into an otherwise
/// complete l-partite graph, balanced by fresh vertices, plus one apex per
/// copy joined to exactly its own copy. A cross-class pair inside one copy is
/// an edge iff it is NOT an edge of that copy, i.e. the gadgets live in the
/// l-partite complement; pairs across copies or touching fresh vertices are
/// always edges. Layout: copies, then Y_1..Y_l blocks, then apexes.
inline LabeledGraph pss_full(const PSSParams& params) {
    const int l = params.l, s = params.s;
    const long long n = params.n;
    if (l < 2 || s < 2) throw std::invalid_argument("pss_full: need l >= 2, s >= 2");
    i128 sl = 1;
    for (int i = 0; i < l; ++i) sl *= s;
    i128 lo = 4 * sl * l + s, hi = 4 * sl * l + 2 * s;
    if (n < lo || n > hi)
        throw std::invalid_argument("pss_full: n=" + std::to_string(n) + " outside window [" +
                                    std::to_string(static_cast<long long>(lo)) + "," +
                                    std::to_string(static_cast<long long>(hi)) + "]");
    if (params.top_graph && params.top_graph->order() != s)
        throw std::invalid_argument("pss_full: top graph must have exactly s vertices");

    LabeledGraph gadget = pss_gls(l, s);
    const int vs = gadget.graph.order();
    const int nn = static_cast<int>(n);

    // class/copy lookup per vertex; -1 = not in a copy
    std::vector<int> cls(nn, -1), copy(nn, -1), local(nn, -1);
    std::vector<int> gadget_cls(vs, -1);
    for (int i = 0; i < l; ++i)
        for (int u : gadget.classes.classes[i]) gadget_cls[u] = i;

    for (int p = 0; p < s; ++p)
        for (int u = 0; u < vs; ++u) {
            int v = p * vs + u;
            cls[v] = gadget_cls[u];
            copy[v] = p;
            local[v] = u;
        }

    // Balancing: class i already holds s * |gadget class i| vertices; targets
    // are floor/ceil of (n-s)/l with the ceilings given to the largest bases
    // first (ties: lower class index). Each class must gain at least one
    // fresh vertex.
    long long total = n - s;
    long long q = total / l, rem = total % l;
    std::vector<long long> base(l), target(l, q);
    for (int i = 0; i < l; ++i)
        base[i] = static_cast<long long>(s) * gadget.classes.classes[i].size();
    std::vector<int> by_base = detail::range_vec(l);
    std::stable_sort(by_base.begin(), by_base.end(),
                     [&](int a, int b) { return base[a] > base[b]; });
    for (int i = 0; i < rem; ++i) target[by_base[i]] += 1;
    std::vector<long long> m(l);
    for (int i = 0; i < l; ++i) {
        m[i] = target[i] - base[i];
        if (m[i] < 1)
            throw std::invalid_argument("pss_full: infeasible balancing, class " +
                                        std::to_string(i + 1) + " would need m=" +
                                        std::to_string(m[i]));
    }

    int v = s * vs;
    for (int i = 0; i < l; ++i)
        for (long long j = 0; j < m[i]; ++j) cls[v++] = i;
    const int apex0 = v;
    for (int p = 0; p < s; ++p) cls[v++] = l;  // apex class
    if (v != nn) throw std::logic_error("pss_full: vertex layout mismatch");

    Graph g(nn);
    for (int a = 0; a < apex0; ++a)
        for (int b = a + 1; b < apex0; ++b) {
            if (cls[a] == cls[b]) continue;
            if (copy[a] >= 0 && copy[a] == copy[b] &&
                gadget.graph.has_edge(local[a], local[b]))
                continue;
            g.add_edge(a, b);
        }
    for (int p = 0; p < s; ++p)
        for (int u = 0; u < vs; ++u) g.add_edge(apex0 + p, p * vs + u);
    if (params.top_graph)
        for (auto [a, b] : params.top_graph->edges()) g.add_edge(apex0 + a, apex0 + b);

    LabeledGraph out{std::move(g), {}};
    out.classes.classes.assign(l + 1, {});
    for (int u = 0; u < nn; ++u) out.classes.classes[cls[u]].push_back(u);
    return out;
}

/// The r-graph whose edges are exactly the r-cliques of g.
inline Hypergraph lift_cliques_to_rgraph(const Graph& g, int r) {
    if (r < 2) throw std::invalid_argument("lift_cliques_to_rgraph: need r >= 2");
    std::vector<std::vector<int>> edges;
    for_each_clique(g, r, [&](const std::vector<int>& c) {
        edges.push_back(c);
        return true;
    });
    return Hypergraph(r, g.order(), edges);
}

/// Class labels of the wheel-blowup 3-graph: A_1..A_5 then B_1..B_{l-2},
/// contiguous. For l = 3 there is a single B class.
inline Partition wheel_blowup_parts(int l, long long n) {
    if (l < 3) throw std::invalid_argument("wheel_blowup_3graph: need l >= 3");
    long long denom = l == 3 ? 7 : 3 * l - 1;
    if (n < 0 || n % denom != 0)
        throw std::invalid_argument("wheel_blowup_3graph: n=" + std::to_string(n) +
                                    " not divisible by " + std::to_string(denom));
    long long a = n / denom;
    long long b = l == 3 ? 2 * a : 3 * a;
    int nb = l == 3 ? 1 : l - 2;
    Partition p;
    int v = 0;
    for (int i = 0; i < 5; ++i) {
        std::vector<int> c(a);
        std::iota(c.begin(), c.end(), v);
        v += static_cast<int>(a);
        p.classes.push_back(std::move(c));
    }
    for (int j = 0; j < nb; ++j) {
        std::vector<int> c(b);
        std::iota(c.begin(), c.end(), v);
        v += static_cast<int>(b);
        p.classes.push_back(std::move(c));
    }
    return p;
}

/// The tight 3-graph for the positive co-degree threshold: classes A_1..A_5 in
/// a cycle and B classes, edges of the three transversal types
/// (A_i, A_{i+1}, B_j), (A_i, B_j, B_j'), (B_j, B_j', B_j'').
inline Hypergraph wheel_blowup_3graph(int l, long long n) {
    Partition parts = wheel_blowup_parts(l, n);
    const int nb = static_cast<int>(parts.classes.size()) - 5;
    std::vector<std::vector<int>> edges;
    auto cross = [&](const std::vector<int>& x, const std::vector<int>& y,
                     const std::vector<int>& z) {
        for (int a : x)
            for (int b : y)
                for (int c : z) edges.push_back({a, b, c});
    };
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < nb; ++j)
            cross(parts.classes[i], parts.classes[(i + 1) % 5], parts.classes[5 + j]);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < nb; ++j)
            for (int jp = j + 1; jp < nb; ++jp)
                cross(parts.classes[i], parts.classes[5 + j], parts.classes[5 + jp]);
    for (int j = 0; j < nb; ++j)
        for (int jp = j + 1; jp < nb; ++jp)
            for (int jpp = jp + 1; jpp < nb; ++jpp)
                cross(parts.classes[5 + j], parts.classes[5 + jp], parts.classes[5 + jpp]);
    return Hypergraph(3, static_cast<int>(n), edges);
}

} // namespace hgsat
