#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hgsat/graph.hpp"
#include "hgsat/rational.hpp"

namespace hgsat {

namespace detail {

/// Degeneracy-ordered enumeration frame: vertex i (in the new labeling) keeps
/// only neighbors with larger position, so every clique is visited once.
struct CliqueCtx {
    int n = 0;
    std::vector<int> ord;  // position -> original vertex
    std::vector<Bitset> fwd;

    explicit CliqueCtx(const Graph& g) : n(g.order()), ord(degeneracy_order(g)), fwd(n, Bitset(n)) {
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[ord[i]] = i;
        for (int i = 0; i < n; ++i) {
            const Bitset& nb = g.neighbors(ord[i]);
            for (int u = nb.next(0); u >= 0; u = nb.next(u + 1))
                if (pos[u] > i) fwd[i].set(pos[u]);
        }
    }
};

inline long long count_rec(const CliqueCtx& c, const Bitset& cand, int need) {
    if (need == 0) return 1;
    if (cand.count() < need) return 0;
    long long total = 0;
    for (int v = cand.next(0); v >= 0; v = cand.next(v + 1))
        total += count_rec(c, cand & c.fwd[v], need - 1);
    return total;
}

inline bool find_rec(const CliqueCtx& c, const Bitset& cand, int need, std::vector<int>& cur) {
    if (need == 0) return true;
    if (cand.count() < need) return false;
    for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
        cur.push_back(v);
        if (find_rec(c, cand & c.fwd[v], need - 1, cur)) return true;
        cur.pop_back();
    }
    return false;
}

inline bool visit_rec(const CliqueCtx& c, const Bitset& cand, int need, std::vector<int>& cur,
                      const std::function<bool(const std::vector<int>&)>& fn) {
    if (need == 0) {
        std::vector<int> out;
        out.reserve(cur.size());
        for (int p : cur) out.push_back(c.ord[p]);
        std::sort(out.begin(), out.end());
        return fn(out);
    }
    if (cand.count() < need) return true;
    for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
        cur.push_back(v);
        if (!visit_rec(c, cand & c.fwd[v], need - 1, cur, fn)) return false;
        cur.pop_back();
    }
    return true;
}

} // namespace detail

/// Exact number of t-cliques.
inline long long count_cliques(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("count_cliques: t must be >= 1");
    if (t == 1) return g.order();
    detail::CliqueCtx c(g);
    long long total = 0;
    for (int v = 0; v < c.n; ++v) total += detail::count_rec(c, c.fwd[v], t - 1);
    return total;
}

/// First t-clique in the deterministic enumeration order, vertices ascending.
inline std::optional<std::vector<int>> find_kt(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("find_kt: t must be >= 1");
    detail::CliqueCtx c(g);
    std::vector<int> cur;
    for (int v = 0; v < c.n; ++v) {
        cur.assign(1, v);
        if (detail::find_rec(c, c.fwd[v], t - 1, cur)) {
            std::vector<int> out;
            for (int p : cur) out.push_back(c.ord[p]);
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    return std::nullopt;
}

inline bool is_kt_free(const Graph& g, int t) {
    if (t < 2) throw std::invalid_argument("is_kt_free: t must be >= 2");
    return !find_kt(g, t);
}

/// Visit every t-clique once (vertices ascending); fn returns false to stop.
inline void for_each_clique(const Graph& g, int t,
                            const std::function<bool(const std::vector<int>&)>& fn) {
    if (t < 1) throw std::invalid_argument("for_each_clique: t must be >= 1");
    detail::CliqueCtx c(g);
    std::vector<int> cur;
    for (int v = 0; v < c.n; ++v) {
        cur.assign(1, v);
        if (!detail::visit_rec(c, c.fwd[v], t - 1, cur, fn)) return;
    }
}

/// Does a t-clique exist inside the candidate set? Optionally yields one
/// (original labels, ascending). t = 0 is the empty clique and always exists.
inline bool has_clique_in(const Graph& g, const Bitset& cand0, int t,
                          std::vector<int>* out = nullptr) {
    if (t < 0) throw std::invalid_argument("has_clique_in: t must be >= 0");
    std::vector<int> cur;
    std::function<bool(const Bitset&, int, int)> rec = [&](const Bitset& cand, int from,
                                                           int need) -> bool {
        if (need == 0) return true;
        if (cand.count() < need) return false;
        for (int v = cand.next(from); v >= 0; v = cand.next(v + 1)) {
            cur.push_back(v);
            if (rec(cand & g.neighbors(v), v + 1, need - 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    if (!rec(cand0, 0, t)) return false;
    if (out) *out = cur;
    return true;
}

/// Minimum triangle count over edges lying in at least one triangle; absent
/// when no edge does.
inline std::optional<long long> t_plus(const Graph& g) {
    std::optional<long long> best;
    for (auto [u, v] : g.edges()) {
        long long tri = (g.neighbors(u) & g.neighbors(v)).count();
        if (tri >= 1 && (!best || tri < *best)) best = tri;
    }
    return best;
}

/// Exact copy counts of K_1..K_ell.
struct CliqueCounts {
    int ell = 0;
    std::vector<long long> counts;  // counts[i-1] = number of K_i

    long long k(int i) const { return counts.at(i - 1); }
};

/// Counts K_1..K_l and verifies the clique chain
/// (k_l/C(l,l))^(1/l) <= ... <= (k_2/C(l,2))^(1/2) <= k_1/l
/// with exact cross-powered integer comparisons. The graph must be
/// K_{l+1}-free; otherwise this throws with a witness in the message.
inline std::pair<CliqueCounts, bool> fisher_ryan_check(const Graph& g, int l) {
    if (l < 1) throw std::invalid_argument("fisher_ryan_check: l must be >= 1");
    if (auto w = find_kt(g, l + 1))
        throw std::invalid_argument("fisher_ryan_check: graph contains K_" +
                                    std::to_string(l + 1) + " on " + detail::set_str(*w));
    CliqueCounts cc;
    cc.ell = l;
    cc.counts.resize(l);
    for (int i = 1; i <= l; ++i) cc.counts[i - 1] = count_cliques(g, i);
    bool ok = true;
    for (int i = 1; i + 1 <= l && ok; ++i) {
        // (k_{i+1}/C(l,i+1))^(1/(i+1)) <= (k_i/C(l,i))^(1/i)
        ok = root_leq(cc.k(i + 1), binomial(l, i + 1), i + 1, cc.k(i), binomial(l, i), i);
    }
    return {cc, ok};
}

/// Common neighborhood of a non-empty vertex set.
inline std::vector<int> common_neighborhood(const Graph& g, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("common_neighborhood: empty vertex set");
    Bitset acc = g.neighbors(s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) acc &= g.neighbors(s[i]);
    return acc.to_vector();
}

} // namespace hgsat
