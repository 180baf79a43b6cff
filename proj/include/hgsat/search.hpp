#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hgsat/bounds.hpp"
#include "hgsat/cliques.hpp"
#include "hgsat/constructions.hpp"
#include "hgsat/hypergraph.hpp"
#include "hgsat/rational.hpp"

namespace hgsat {

inline long long env_guard(const char* name, long long def) {
    const char* s = std::getenv(name);
    if (!s || !*s) return def;
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (!end || *end != '\0' || v < 1)
        throw std::invalid_argument(std::string(name) + ": not a positive integer");
    return v;
}

inline long long brute_guard_default() { return env_guard("HGSAT_BRUTE_GUARD", 24); }
inline long long canon_guard_default() { return env_guard("HGSAT_CANON_GUARD", 9); }
inline long long bnb_guard_default() { return env_guard("HGSAT_BNB_GUARD", 20000000); }

/// Lexicographically minimal edge list over all vertex relabelings; equal
/// forms iff isomorphic. Brute force over n! permutations, guarded.
inline std::vector<std::vector<int>> canonical_form(const Hypergraph& h,
                                                    long long guard = canon_guard_default()) {
    if (h.n > guard)
        throw GuardError("canonical_form: n=" + std::to_string(h.n) + " exceeds guard " +
                         std::to_string(guard));
    std::vector<int> perm = detail::range_vec(h.n);
    std::vector<std::vector<int>> best;
    bool first = true;
    do {
        std::vector<std::vector<int>> mapped;
        mapped.reserve(h.edges.size());
        for (const auto& e : h.edges) {
            std::vector<int> me(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) me[i] = perm[e[i]];
            std::sort(me.begin(), me.end());
            mapped.push_back(std::move(me));
        }
        std::sort(mapped.begin(), mapped.end());
        if (first || mapped < best) {
            best = std::move(mapped);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

struct TuranSearchResult {
    int n = 0, l = 0, r = 0;
    long long max_edges = -1;
    std::vector<std::vector<std::vector<int>>> extremal_canonical_forms;
    long long count_checked = 0;  // family-free instances fully examined
};

namespace detail {

// Pair-coverage masks for the brute-force scan; fits n <= 32.
struct PairWords {
    std::array<std::uint64_t, 8> w{};
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void or_with(const PairWords& o, int nw) {
        for (int i = 0; i < nw; ++i) w[i] |= o.w[i];
    }
    bool subset_of(const PairWords& o, int nw) const {
        for (int i = 0; i < nw; ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
};

struct BruteShared {
    int n = 0, l = 0, r = 0, m = 0, nw = 0;
    std::vector<std::vector<int>> rsets;    // lexicographic
    std::vector<PairWords> rmask;           // pairs covered by each r-set
    std::vector<PairWords> reqmask;         // full pair set of each (l+1)-set
};

struct BruteLocal {
    long long best = -1;
    std::vector<std::uint32_t> masks;  // instances achieving best
    long long leaves = 0;
};

// Edge indices are decided from high to low with "absent" first, so complete
// hypergraphs appear in the integer order of their edge-subset bitmasks.
// Subtrees whose partial coverage already contains a member are pruned whole.
inline void brute_dfs(const BruteShared& sh, int idx, std::uint32_t mask, int cnt,
                      const PairWords& cover, BruteLocal& out) {
    if (idx < 0) {
        ++out.leaves;
        if (cnt > out.best) {
            out.best = cnt;
            out.masks.assign(1, mask);
        } else if (cnt == out.best) {
            out.masks.push_back(mask);
        }
        return;
    }
    brute_dfs(sh, idx - 1, mask, cnt, cover, out);
    PairWords nc = cover;
    nc.or_with(sh.rmask[idx], sh.nw);
    for (const auto& req : sh.reqmask)
        if (req.subset_of(nc, sh.nw)) return;
    brute_dfs(sh, idx - 1, mask | (std::uint32_t{1} << idx), cnt + 1, nc, out);
}

} // namespace detail

/// Called as contiguous mask ranges complete; drives progress reporting.
using SearchProgress = std::function<void(int done_items, int total_items, long long leaves)>;

/// Exhaustive scan of all 2^C(n,r) r-graphs for the maximum family-free edge
/// count; with dedup the extremal instances are collected up to isomorphism.
/// Deterministic for any thread count: the mask space splits into contiguous
/// ranges merged in order.
inline TuranSearchResult brute_force_turan(int n, int l, int r, bool dedup, int threads = 1,
                                           long long guard = brute_guard_default(),
                                           const SearchProgress& progress = {}) {
    if (r < 2 || l < r) throw std::invalid_argument("brute_force_turan: need l >= r >= 2");
    if (n < 0 || n > 32) throw std::invalid_argument("brute_force_turan: need 0 <= n <= 32");
    if (threads < 1) throw std::invalid_argument("brute_force_turan: threads must be >= 1");
    long long m = binomial(n, r);
    if (m > guard)
        throw GuardError("brute_force_turan: C(n,r)=" + std::to_string(m) +
                         " exceeds guard " + std::to_string(guard));
    long long members = binomial(n, l + 1);
    if (members > 2000000)
        throw GuardError("brute_force_turan: C(n,l+1)=" + std::to_string(members) +
                         " exceeds member guard 2000000");

    detail::BruteShared sh;
    sh.n = n;
    sh.l = l;
    sh.r = r;
    sh.m = static_cast<int>(m);
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    int np = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pair_index[u][v] = np++;
    sh.nw = (np + 63) / 64;

    std::vector<int> all = detail::range_vec(n);
    detail::for_each_subset(all, r, [&](const std::vector<int>& e) {
        sh.rsets.push_back(e);
        detail::PairWords pw;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) pw.set(pair_index[e[i]][e[j]]);
        sh.rmask.push_back(pw);
        return true;
    });
    detail::for_each_subset(all, l + 1, [&](const std::vector<int>& s) {
        detail::PairWords pw;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) pw.set(pair_index[s[i]][s[j]]);
        sh.reqmask.push_back(pw);
        return true;
    });

    // Split on the top bits (decided first): item k covers one contiguous
    // range of masks.
    int split = 0;
    while (split < sh.m && (1 << split) < 4 * threads) ++split;
    if (progress && sh.m >= 16)
        while (split < sh.m && split < 4) ++split;
    const int items = 1 << split;
    std::vector<detail::BruteLocal> part(items);
    std::mutex progress_mu;
    int done = 0;
    long long leaves_seen = 0;

    auto run_item = [&](int k) {
        detail::PairWords cover;
        std::uint32_t mask = 0;
        int cnt = 0;
        bool pruned = false;
        for (int b = 0; b < split && !pruned; ++b) {
            int idx = sh.m - 1 - b;
            if ((k >> (split - 1 - b)) & 1) {
                cover.or_with(sh.rmask[idx], sh.nw);
                mask |= std::uint32_t{1} << idx;
                ++cnt;
                for (const auto& req : sh.reqmask)
                    if (req.subset_of(cover, sh.nw)) pruned = true;  // whole range non-free
            }
        }
        if (!pruned) detail::brute_dfs(sh, sh.m - 1 - split, mask, cnt, cover, part[k]);
        if (progress) {
            std::lock_guard<std::mutex> lock(progress_mu);
            ++done;
            leaves_seen += part[k].leaves;
            progress(done, items, leaves_seen);
        }
    };

    if (threads == 1) {
        for (int k = 0; k < items; ++k) run_item(k);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (int k = t; k < items; k += threads) run_item(k);
            });
        for (auto& th : pool) th.join();
    }

    TuranSearchResult res;
    res.n = n;
    res.l = l;
    res.r = r;
    std::vector<std::uint32_t> winners;
    for (int k = 0; k < items; ++k) {
        res.count_checked += part[k].leaves;
        if (part[k].best > res.max_edges) {
            res.max_edges = part[k].best;
            winners = part[k].masks;
        } else if (part[k].best == res.max_edges) {
            winners.insert(winners.end(), part[k].masks.begin(), part[k].masks.end());
        }
    }
    if (dedup) {
        std::vector<std::vector<std::vector<int>>> forms;
        for (std::uint32_t mask : winners) {
            std::vector<std::vector<int>> edges;
            for (int i = 0; i < sh.m; ++i)
                if ((mask >> i) & 1) edges.push_back(sh.rsets[i]);
            forms.push_back(canonical_form(Hypergraph(r, n, edges)));
        }
        std::sort(forms.begin(), forms.end());
        forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
        res.extremal_canonical_forms = std::move(forms);
    }
    return res;
}

/// First embedding of a 5-wheel-like W_{l,k} as a (not necessarily induced)
/// subgraph, trying the shared-set size k from l-2 downward so the witness of
/// minimum order comes first. Absent when no W_{l,k} embeds for any k.
inline std::optional<WheelWitness> find_wheel_subgraph(const Graph& g, int l) {
    if (l < 2) throw std::invalid_argument("find_wheel_subgraph: need l >= 2");
    const int n = g.order();
    std::vector<std::vector<int>> cliques;
    std::vector<Bitset> adj_all;  // vertices adjacent to every clique member
    for_each_clique(g, l - 1, [&](const std::vector<int>& c) {
        Bitset acc = g.neighbors(c[0]);
        for (std::size_t i = 1; i < c.size(); ++i) acc &= g.neighbors(c[i]);
        cliques.push_back(c);
        adj_all.push_back(std::move(acc));
        return true;
    });
    std::vector<int> inter;
    for (int k = l - 2; k >= 0; --k) {
        for (std::size_t i = 0; i < cliques.size(); ++i) {
            for (std::size_t j = i + 1; j < cliques.size(); ++j) {
                inter.clear();
                std::set_intersection(cliques[i].begin(), cliques[i].end(), cliques[j].begin(),
                                      cliques[j].end(), std::back_inserter(inter));
                if (static_cast<int>(inter.size()) != k) continue;
                Bitset in_union(n);
                for (int u : cliques[i]) in_union.set(u);
                for (int u : cliques[j]) in_union.set(u);
                Bitset tops = adj_all[i] & adj_all[j];
                tops.subtract(in_union);
                if (tops.none()) continue;
                Bitset u1s = adj_all[i];
                u1s.subtract(in_union);
                Bitset u2s = adj_all[j];
                u2s.subtract(in_union);
                for (int v = tops.next(0); v >= 0; v = tops.next(v + 1)) {
                    for (int u1 = u1s.next(0); u1 >= 0; u1 = u1s.next(u1 + 1)) {
                        if (u1 == v) continue;
                        Bitset u2cand = u2s & g.neighbors(u1);
                        u2cand.reset(v);
                        u2cand.reset(u1);
                        int u2 = u2cand.next(0);
                        if (u2 < 0) continue;
                        WheelWitness w;
                        w.ell = l;
                        w.k = k;
                        w.top = v;
                        w.bottom = {u1, u2};
                        w.q1 = cliques[i];
                        w.q2 = cliques[j];
                        w.r_set = inter;
                        return w;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

struct MaxMultipartiteResult {
    bool conclusive = false;
    int size = 0;
    std::vector<int> vertices;
    Partition classes;
    unsigned long long nodes = 0;
};

namespace detail {

struct BnBState {
    const Graph* g = nullptr;
    int l = 0;
    unsigned long long guard = 0;
    unsigned long long nodes = 0;
    bool aborted = false;
    std::function<void(unsigned long long, int)> progress;
    std::vector<int> order;
    std::vector<Bitset> notadj;  // complement rows (self excluded)
    int best = -1;
    std::vector<std::vector<int>> best_classes;

    std::vector<std::vector<int>> members;
    std::vector<Bitset> cap;  // adjacent to every member of the class
    std::vector<Bitset> ind;  // adjacent to no member of the class

    bool feasible(int v, int c) const {
        if (!ind[c].test(v)) return false;
        for (int cp = 0; cp < static_cast<int>(members.size()); ++cp)
            if (cp != c && !cap[cp].test(v)) return false;
        return true;
    }

    int alive_count(const Bitset& rem, int used) const {
        const int n = g->order();
        Bitset alive(n);
        for (int c = 0; c < used; ++c) {
            Bitset j = ind[c];
            for (int cp = 0; cp < used; ++cp)
                if (cp != c) j &= cap[cp];
            alive |= j;
        }
        if (used < l) {
            Bitset j(n);
            for (int v = 0; v < n; ++v) j.set(v);
            for (int c = 0; c < used; ++c) j &= cap[c];
            alive |= j;
        }
        alive &= rem;
        return alive.count();
    }

    void record(int selected) {
        if (selected > best) {
            best = selected;
            best_classes = members;
        }
    }

    void rec(int pos, int used, int selected, const Bitset& rem) {
        if (aborted) return;
        if (++nodes > guard) {
            aborted = true;
            return;
        }
        if (progress && (nodes & ((1ull << 24) - 1)) == 0) progress(nodes, best);
        const int n = g->order();
        if (pos == n) {
            record(selected);
            return;
        }
        if (selected + alive_count(rem, used) <= best) return;
        int v = order[pos];
        Bitset rem2 = rem;
        rem2.reset(v);
        for (int c = 0; c < used; ++c) {
            if (!feasible(v, c)) continue;
            members[c].push_back(v);
            Bitset oc = cap[c], oi = ind[c];
            cap[c] &= g->neighbors(v);
            ind[c] &= notadj[v];
            rec(pos + 1, used, selected + 1, rem2);
            cap[c] = oc;
            ind[c] = oi;
            members[c].pop_back();
            if (aborted) return;
        }
        if (used < l) {
            bool ok = true;
            for (int c = 0; c < used && ok; ++c) ok = cap[c].test(v);
            if (ok) {
                members.push_back({v});
                Bitset nc = g->neighbors(v);
                Bitset ni = notadj[v];
                cap.push_back(std::move(nc));
                ind.push_back(std::move(ni));
                rec(pos + 1, used + 1, selected + 1, rem2);
                members.pop_back();
                cap.pop_back();
                ind.pop_back();
                if (aborted) return;
            }
        }
        rec(pos + 1, used, selected, rem2);
    }
};

} // namespace detail

/// Maximum-cardinality vertex set inducing a complete multipartite graph with
/// at most l classes, by branch and bound over class assignments. Exceeding
/// the node guard yields an explicit inconclusive result carrying the best
/// incumbent, never a silent wrong answer.
inline MaxMultipartiteResult max_complete_multipartite_induced(
    const Graph& g, int l,
    unsigned long long guard = static_cast<unsigned long long>(bnb_guard_default()),
    const std::function<void(unsigned long long nodes, int best)>& progress = {}) {
    if (l < 1) throw std::invalid_argument("max_complete_multipartite_induced: need l >= 1");
    const int n = g.order();
    detail::BnBState st;
    st.g = &g;
    st.l = l;
    st.guard = guard;
    st.progress = progress;
    st.order = detail::range_vec(n);
    std::stable_sort(st.order.begin(), st.order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    st.notadj.reserve(n);
    for (int v = 0; v < n; ++v) {
        Bitset c(n);
        for (int u = 0; u < n; ++u)
            if (u != v && !g.has_edge(u, v)) c.set(u);
        st.notadj.push_back(std::move(c));
    }

    // Greedy incumbent in the same vertex order.
    {
        std::vector<std::vector<int>> mem;
        std::vector<Bitset> cap, ind;
        for (int v : st.order) {
            int placed = -1;
            for (int c = 0; c < static_cast<int>(mem.size()) && placed < 0; ++c) {
                bool ok = ind[c].test(v);
                for (int cp = 0; cp < static_cast<int>(mem.size()) && ok; ++cp)
                    if (cp != c) ok = cap[cp].test(v);
                if (ok) placed = c;
            }
            if (placed >= 0) {
                mem[placed].push_back(v);
                cap[placed] &= g.neighbors(v);
                ind[placed] &= st.notadj[v];
            } else if (static_cast<int>(mem.size()) < l) {
                bool ok = true;
                for (std::size_t c = 0; c < mem.size() && ok; ++c) ok = cap[c].test(v);
                if (ok) {
                    mem.push_back({v});
                    cap.push_back(g.neighbors(v));
                    ind.push_back(st.notadj[v]);
                }
            }
        }
        int sel = 0;
        for (auto& c : mem) sel += static_cast<int>(c.size());
        st.best = sel;
        st.best_classes = mem;
    }

    Bitset rem(n);
    for (int v = 0; v < n; ++v) rem.set(v);
    st.rec(0, 0, 0, rem);

    MaxMultipartiteResult res;
    res.conclusive = !st.aborted;
    res.nodes = st.nodes;
    res.size = st.best;
    res.classes.classes = st.best_classes;
    res.classes.normalize();
    for (const auto& c : res.classes.classes)
        res.vertices.insert(res.vertices.end(), c.begin(), c.end());
    std::sort(res.vertices.begin(), res.vertices.end());
    return res;
}

struct PeelResult {
    Graph remainder;           // induced on kept, relabeled in kept order
    std::vector<int> kept;     // original ids, ascending
    std::vector<int> deleted;  // original ids in deletion order
    Rat eta;
};

/// Iterated deletion of small vertices: while some vertex has degree strictly
/// below ((l-1)/l - eta) * (current order), delete the minimum-degree one
/// (ties: lowest index), recomputing the threshold against the shrinking
/// order.
inline PeelResult peel_small_vertices(const Graph& g, int l, const Rat& eta) {
    if (l < 2) throw std::invalid_argument("peel_small_vertices: need l >= 2");
    if (eta < Rat(0) || eta >= Rat(l - 1, l))
        throw std::invalid_argument("peel_small_vertices: need 0 <= eta < (l-1)/l");
    Rat tau = Rat(l - 1, l) - eta;
    const int n = g.order();
    Bitset alive(n);
    for (int v = 0; v < n; ++v) alive.set(v);
    PeelResult out;
    out.eta = eta;
    int m = n;
    while (m > 0) {
        int argmin = -1, dmin = 0;
        for (int v = alive.next(0); v >= 0; v = alive.next(v + 1)) {
            int d = (g.neighbors(v) & alive).count();
            if (argmin < 0 || d < dmin) {
                argmin = v;
                dmin = d;
            }
        }
        // small iff d < tau * m, cross multiplied
        if (static_cast<i128>(dmin) * tau.den < static_cast<i128>(tau.num) * m) {
            alive.reset(argmin);
            out.deleted.push_back(argmin);
            --m;
        } else {
            break;
        }
    }
    out.kept = alive.to_vector();
    out.remainder = g.induced(out.kept);
    return out;
}

} // namespace hgsat
