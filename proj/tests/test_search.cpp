#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "hgsat/saturation.hpp"
#include "hgsat/search.hpp"

using namespace hgsat;

namespace {

Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm) {
    std::vector<std::vector<int>> es;
    for (const auto& e : h.edges) {
        std::vector<int> m;
        for (int v : e) m.push_back(perm[v]);
        es.push_back(m);
    }
    return Hypergraph(h.r, h.n, es);
}

bool wheel_witness_embeds(const Graph& g, const WheelWitness& w) {
    auto in = [](const std::vector<int>& s, int v) {
        return std::find(s.begin(), s.end(), v) != s.end();
    };
    std::set<int> body(w.q1.begin(), w.q1.end());
    body.insert(w.q2.begin(), w.q2.end());
    if (body.count(w.top) || body.count(w.bottom.first) || body.count(w.bottom.second))
        return false;
    std::set<int> roles{w.top, w.bottom.first, w.bottom.second};
    if (roles.size() != 3) return false;
    std::vector<int> inter;
    std::set_intersection(w.q1.begin(), w.q1.end(), w.q2.begin(), w.q2.end(),
                          std::back_inserter(inter));
    if (inter != w.r_set || static_cast<int>(inter.size()) != w.k) return false;
    if (static_cast<int>(w.q1.size()) != w.ell - 1 || static_cast<int>(w.q2.size()) != w.ell - 1)
        return false;
    for (const auto& q : {w.q1, w.q2})
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = i + 1; j < q.size(); ++j)
                if (!g.has_edge(q[i], q[j])) return false;
    for (int u : w.q1)
        if (!g.has_edge(w.top, u) || !g.has_edge(w.bottom.first, u)) return false;
    for (int u : w.q2)
        if (!g.has_edge(w.top, u) || !g.has_edge(w.bottom.second, u)) return false;
    (void)in;
    return g.has_edge(w.bottom.first, w.bottom.second);
}

// Exhaustive oracle: largest vertex subset inducing a complete multipartite
// graph with at most l classes.
int max_multipartite_by_subsets(const Graph& g, int l) {
    const int n = g.order();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.push_back(v);
        if (static_cast<int>(s.size()) <= best) continue;
        auto parts = complete_multipartite_parts(g.induced(s));
        if (parts && static_cast<int>(parts->classes.size()) <= l)
            best = static_cast<int>(s.size());
    }
    return best;
}

} // namespace

TEST_CASE("brute force turan maxima") {
    struct Row {
        int n, l, r;
    };
    for (auto [n, l, r] : {Row{4, 3, 3}, Row{5, 3, 3}, Row{6, 3, 3}, Row{5, 2, 2}, Row{5, 3, 2}}) {
        TuranSearchResult res = brute_force_turan(n, l, r, true);
        CHECK(res.max_edges == turan_count(n, l, r));
        REQUIRE(res.extremal_canonical_forms.size() == 1);
        CHECK(res.extremal_canonical_forms[0] == canonical_form(turan_hypergraph(n, l, r)));
    }

    TuranSearchResult quad = brute_force_turan(4, 2, 2, true);
    CHECK(quad.max_edges == 4);
    CHECK(quad.extremal_canonical_forms.size() == 1);
}

TEST_CASE("brute force is deterministic across thread counts") {
    TuranSearchResult a = brute_force_turan(5, 3, 3, true, 1);
    TuranSearchResult b = brute_force_turan(5, 3, 3, true, 3);
    CHECK(a.max_edges == b.max_edges);
    CHECK(a.count_checked == b.count_checked);
    CHECK(a.extremal_canonical_forms == b.extremal_canonical_forms);
}

TEST_CASE("brute force guard fails loudly") {
    CHECK_THROWS_AS(brute_force_turan(9, 3, 3, false), GuardError);
    CHECK_THROWS_WITH(brute_force_turan(9, 3, 3, false),
                      Catch::Matchers::ContainsSubstring("guard 24"));
}

TEST_CASE("canonical form basics") {
    Hypergraph a(3, 5, {{0, 1, 2}});
    Hypergraph b(3, 5, {{2, 3, 4}});
    CHECK(canonical_form(a) == canonical_form(b));

    // the two 2-edge 3-graphs on 5 vertices: sharing two vertices vs sharing at most one
    Hypergraph share2(3, 5, {{0, 1, 2}, {0, 1, 3}});
    Hypergraph share1(3, 5, {{0, 1, 2}, {0, 3, 4}});
    CHECK(canonical_form(share2) != canonical_form(share1));

    CHECK_THROWS_AS(canonical_form(Hypergraph::empty(3, 12)), GuardError);
}

TEST_CASE("canonical form is relabeling invariant") {
    std::mt19937 rng(83);
    std::vector<std::vector<int>> triples;
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);  // up to 7
        triples.clear();
        detail::for_each_subset(detail::range_vec(n), 3, [&](const std::vector<int>& t) {
            triples.push_back(t);
            return true;
        });
        std::vector<std::vector<int>> es;
        for (const auto& t : triples)
            if (rng() % 100 < 35) es.push_back(t);
        Hypergraph h(3, n, es);
        std::vector<int> perm = detail::range_vec(n);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(h) == canonical_form(relabel(h, perm)));
    }
}

TEST_CASE("wheel search on named graphs") {
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto w = find_wheel_subgraph(c5, 2);
    REQUIRE(w.has_value());
    CHECK(w->k == 0);
    CHECK(wheel_witness_embeds(c5, *w));

    CHECK_FALSE(find_wheel_subgraph(Graph::complete_multipartite({2, 2, 2}), 3).has_value());

    Graph sh = pair_shadow(wheel_blowup_3graph(4, 22));
    auto w4 = find_wheel_subgraph(sh, 4);
    REQUIRE(w4.has_value());
    CHECK(w4->k == 2);
    CHECK(wheel_witness_embeds(sh, *w4));
}

TEST_CASE("generated wheels contain themselves") {
    for (int l = 2; l <= 6; ++l)
        for (int k = 0; k <= l - 2; ++k) {
            WheelGraph wg = wheel(l, k);
            auto w = find_wheel_subgraph(wg.graph, l);
            REQUIRE(w.has_value());
            CHECK(w->k >= k);  // k is searched downward, a larger overlap may embed
            CHECK(wheel_witness_embeds(wg.graph, *w));
        }
}

TEST_CASE("complete multipartite graphs with at most l parts contain no wheel") {
    for (int l = 2; l <= 4; ++l)
        for (int parts = 1; parts <= l; ++parts) {
            std::vector<int> sizes(parts, 2);
            Graph g = Graph::complete_multipartite(sizes);
            CHECK_FALSE(find_wheel_subgraph(g, l).has_value());
        }
}

TEST_CASE("wheel dichotomy on saturated graphs, n = 6, l = 2") {
    std::vector<std::pair<int, int>> pr;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) pr.emplace_back(u, v);
    int saturated = 0;
    for (unsigned mask = 0; mask < (1u << 15); ++mask) {
        Graph g(6);
        for (std::size_t b = 0; b < pr.size(); ++b)
            if ((mask >> b) & 1) g.add_edge(pr[b].first, pr[b].second);
        if (!is_kt_free(g, 3)) continue;
        bool sat = true;
        for (int u = 0; u < 6 && sat; ++u)
            for (int v = u + 1; v < 6 && sat; ++v)
                if (!g.has_edge(u, v) && !g.neighbors(u).intersects(g.neighbors(v))) sat = false;
        if (!sat) continue;
        ++saturated;
        bool cm = complete_multipartite_parts(g).has_value();
        CHECK(find_wheel_subgraph(g, 2).has_value() == !cm);
    }
    CHECK(saturated > 0);
}

TEST_CASE("max induced complete multipartite subgraph") {
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    MaxMultipartiteResult r = max_complete_multipartite_induced(c5, 2);
    REQUIRE(r.conclusive);
    CHECK(r.size == 3);
    CHECK(r.size == max_multipartite_by_subsets(c5, 2));

    Graph t = Graph::complete_multipartite({2, 2, 2});
    MaxMultipartiteResult rt = max_complete_multipartite_induced(t, 3);
    REQUIRE(rt.conclusive);
    CHECK(rt.size == 6);

    LabeledGraph gadget = pss_gls(3, 2);
    MaxMultipartiteResult rg = max_complete_multipartite_induced(gadget.graph, 3);
    REQUIRE(rg.conclusive);
    CHECK(rg.size == 9);
    CHECK(rg.size == max_multipartite_by_subsets(gadget.graph, 3));
    auto parts = complete_multipartite_parts(gadget.graph.induced(rg.vertices));
    REQUIRE(parts.has_value());
    CHECK(static_cast<int>(parts->classes.size()) <= 3);
}

TEST_CASE("max multipartite matches the subset oracle on random graphs") {
    std::mt19937 rng(89);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 50) g.add_edge(u, v);
        for (int l = 1; l <= 3; ++l) {
            MaxMultipartiteResult r = max_complete_multipartite_induced(g, l);
            REQUIRE(r.conclusive);
            CHECK(r.size == max_multipartite_by_subsets(g, l));
        }
    }
}

TEST_CASE("max multipartite guard yields an explicit inconclusive result") {
    Graph g = Graph::complete_multipartite({4, 4, 4});
    MaxMultipartiteResult r = max_complete_multipartite_induced(g, 3, 0);
    CHECK_FALSE(r.conclusive);
    CHECK(r.nodes >= 1);
    CHECK(r.size == 12);  // the greedy incumbent is still reported
}

TEST_CASE("peeling small vertices") {
    // star: the leaves peel one at a time until a single edge survives the rule
    Graph star(6);
    for (int i = 1; i < 6; ++i) star.add_edge(0, i);
    PeelResult pr = peel_small_vertices(star, 2, Rat(1, 10));
    CHECK(pr.deleted == std::vector<int>{1, 2, 3, 4});
    CHECK(pr.kept == std::vector<int>{0, 5});
    CHECK(pr.remainder.size() == 1);

    // balanced Turan graph: nothing is small
    Graph t = Graph::complete_multipartite({3, 3, 3});
    PeelResult pt = peel_small_vertices(t, 3, Rat(1, 100));
    CHECK(pt.deleted.empty());
    CHECK(pt.remainder == t);

    // only the isolated vertex peels
    Graph ku(21);
    for (int u = 0; u < 10; ++u)
        for (int v = 10; v < 20; ++v) ku.add_edge(u, v);
    PeelResult pk = peel_small_vertices(ku, 2, Rat(1, 100));
    CHECK(pk.deleted == std::vector<int>{20});
    CHECK(pk.kept.size() == 20);

    CHECK_THROWS(peel_small_vertices(star, 2, Rat(1, 2)));
    CHECK_THROWS(peel_small_vertices(star, 2, Rat(-1, 10)));
}

TEST_CASE("peel feeds the degree-stability threshold") {
    // with eta strictly below (l-1)/l - (3l-4)/(3l-1) = 1/(l(3l-1)), a free
    // remainder has min degree strictly above the partiteness threshold
    std::mt19937 rng(103);
    for (int l : {2, 3}) {
        Rat eta(1, 100);
        REQUIRE(eta < Rat(1, l * (3 * l - 1)));
        for (int trial = 0; trial < 30; ++trial) {
            int n = 6 + static_cast<int>(rng() % 6);
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 100 < 55) g.add_edge(u, v);
            while (auto w = find_kt(g, l + 1)) g.remove_edge((*w)[0], (*w)[1]);
            PeelResult pr = peel_small_vertices(g, l, eta);
            if (pr.remainder.order() == 0) continue;
            CHECK(is_kt_free(pr.remainder, l + 1));
            CHECK(proper_coloring(pr.remainder, l).has_value());
        }
    }
}

TEST_CASE("peel remainder has no small vertex") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 6 + static_cast<int>(rng() % 6);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 40) g.add_edge(u, v);
        int l = 2 + static_cast<int>(rng() % 3);
        Rat eta(1, 50);
        PeelResult pr = peel_small_vertices(g, l, eta);
        Rat tau = Rat(l - 1, l) - eta;
        int m = pr.remainder.order();
        for (int v = 0; v < m; ++v)
            CHECK_FALSE(Rat(pr.remainder.degree(v)) < tau * Rat(m));
        CHECK(static_cast<int>(pr.deleted.size() + pr.kept.size()) == n);
    }
}
