#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hgsat/constructions.hpp"
#include "hgsat/saturation.hpp"

using namespace hgsat;

namespace {

std::vector<std::pair<int, int>> pair_list(int n) {
    std::vector<std::pair<int, int>> pr;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pr.emplace_back(u, v);
    return pr;
}

Graph graph_of_mask(int n, unsigned mask, const std::vector<std::pair<int, int>>& pr) {
    Graph g(n);
    for (std::size_t b = 0; b < pr.size(); ++b)
        if ((mask >> b) & 1) g.add_edge(pr[b].first, pr[b].second);
    return g;
}

bool report_witness_shape_ok(const SaturationReport& rep) {
    if (rep.is_saturated && !rep.is_free) return false;
    if (!rep.is_free) return rep.violating_member.has_value() && !rep.non_saturating_edge;
    if (!rep.is_saturated) return rep.non_saturating_edge.has_value() && !rep.violating_member;
    return !rep.violating_member && !rep.non_saturating_edge;
}

} // namespace

TEST_CASE("contains_member") {
    Hypergraph complete4(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    auto s = contains_member(complete4, 3);
    REQUIRE(s.has_value());
    CHECK(*s == std::vector<int>{0, 1, 2, 3});

    Hypergraph t = turan_hypergraph(5, 3, 3);
    CHECK_FALSE(contains_member(t, 3).has_value());

    // adding any non-edge triple to the saturated Turan 3-graph covers a 4-set
    std::vector<std::vector<int>> es = t.edges;
    es.push_back({0, 1, 2});
    Hypergraph t2(3, 5, es);
    auto s2 = contains_member(t2, 3);
    REQUIRE(s2.has_value());
    Graph sh = pair_shadow(t2);
    for (std::size_t i = 0; i < s2->size(); ++i)
        for (std::size_t j = i + 1; j < s2->size(); ++j)
            CHECK(sh.has_edge((*s2)[i], (*s2)[j]));
}

TEST_CASE("direct saturation check") {
    auto rep = is_saturated_direct(turan_hypergraph(5, 3, 3), 3);
    CHECK(rep.is_free);
    CHECK(rep.is_saturated);
    CHECK(report_witness_shape_ok(rep));

    auto sparse = is_saturated_direct(Hypergraph(3, 5, {{0, 1, 2}}), 3);
    CHECK(sparse.is_free);
    CHECK_FALSE(sparse.is_saturated);
    CHECK(report_witness_shape_ok(sparse));

    auto wb = is_saturated_direct(wheel_blowup_3graph(3, 14), 3);
    CHECK(wb.is_free);
    CHECK(wb.is_saturated);
}

TEST_CASE("kr-maximal freeness on named instances") {
    CHECK(is_kr_maximal_free(Graph::complete_multipartite({2, 2, 1}), 3, 3).ok());
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(is_kr_maximal_free(c5, 2, 2).ok());

    Graph k222e = Graph::complete_multipartite({2, 2, 2});
    k222e.remove_edge(0, 2);
    auto rep = is_kr_maximal_free(k222e, 3, 3);
    CHECK(rep.is_free);
    CHECK_FALSE(rep.is_maximal);
    CHECK(rep.bad_rset.has_value());
}

TEST_CASE("r-set reduction agrees with the literal quantifier, n=5 full subsets") {
    auto pr = pair_list(5);
    for (unsigned gm = 0; gm < 1024; ++gm) {
        Graph g = graph_of_mask(5, gm, pr);
        bool reduction = is_kr_maximal_free(g, 3, 3).ok();
        bool literal = is_kt_free(g, 4);
        if (literal) {
            std::vector<int> non;
            for (int b = 0; b < 10; ++b)
                if (!((gm >> b) & 1)) non.push_back(b);
            long long base = count_cliques(g, 3);
            for (unsigned em = 1; em < (1u << non.size()) && literal; ++em) {
                Graph gp = g;
                for (std::size_t i = 0; i < non.size(); ++i)
                    if ((em >> i) & 1) gp.add_edge(pr[non[i]].first, pr[non[i]].second);
                if (count_cliques(gp, 3) > base && is_kt_free(gp, 4)) literal = false;
            }
        }
        CHECK(reduction == literal);
    }
}

TEST_CASE("r-set reduction agrees with the within-rset quantifier, n=6") {
    auto pr = pair_list(6);
    std::vector<std::vector<int>> triples;
    detail::for_each_subset(detail::range_vec(6), 3, [&](const std::vector<int>& t) {
        triples.push_back(t);
        return true;
    });
    std::vector<std::vector<int>> tri_pairs;  // pair-slot indices per triple
    for (const auto& t : triples) {
        std::vector<int> ids;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j)
                for (std::size_t b = 0; b < pr.size(); ++b)
                    if (pr[b] == std::make_pair(t[i], t[j])) ids.push_back(static_cast<int>(b));
        tri_pairs.push_back(ids);
    }
    for (unsigned gm = 0; gm < (1u << 15); ++gm) {
        Graph g = graph_of_mask(6, gm, pr);
        bool reduction = is_kr_maximal_free(g, 3, 3).ok();
        bool literal = is_kt_free(g, 4);
        long long base = literal ? count_cliques(g, 3) : 0;
        for (std::size_t t = 0; t < triples.size() && literal; ++t) {
            std::vector<int> missing;
            for (int b : tri_pairs[t])
                if (!((gm >> b) & 1)) missing.push_back(b);
            for (unsigned em = 1; em < (1u << missing.size()) && literal; ++em) {
                Graph gp = g;
                for (std::size_t i = 0; i < missing.size(); ++i)
                    if ((em >> i) & 1) gp.add_edge(pr[missing[i]].first, pr[missing[i]].second);
                if (count_cliques(gp, 3) > base && is_kt_free(gp, 4)) literal = false;
            }
        }
        CHECK(reduction == literal);
    }
}

TEST_CASE("shadow saturation check") {
    Hypergraph t = turan_hypergraph(5, 3, 3);
    auto rep = is_saturated_via_shadow(t, 3);
    CHECK(rep.is_saturated);

    std::vector<std::vector<int>> es = t.edges;
    es.pop_back();
    auto rep2 = is_saturated_via_shadow(Hypergraph(3, 5, es), 3);
    CHECK(rep2.is_free);
    CHECK_FALSE(rep2.is_saturated);
    CHECK(rep2.non_saturating_edge.has_value());

    CHECK(is_saturated_via_shadow(wheel_blowup_3graph(3, 14), 3).is_saturated);
    CHECK_THROWS(is_saturated_via_shadow(graph_to_hypergraph(Graph::complete(3)), 3));
}

TEST_CASE("direct and shadow checks agree on random 3-graphs") {
    std::mt19937 rng(57);
    std::vector<std::vector<int>> triples;
    detail::for_each_subset(detail::range_vec(6), 3, [&](const std::vector<int>& t) {
        triples.push_back(t);
        return true;
    });
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::vector<int>> es;
        for (const auto& t : triples)
            if (rng() % 100 < 25) es.push_back(t);
        Hypergraph h(3, 6, es);
        auto d = is_saturated_direct(h, 3);
        auto s = is_saturated_via_shadow(h, 3);
        CHECK(d.is_free == s.is_free);
        CHECK(d.is_saturated == s.is_saturated);
        CHECK(report_witness_shape_ok(d));
        CHECK(report_witness_shape_ok(s));
    }
}

TEST_CASE("edge count is at most the r-clique count of the shadow") {
    std::mt19937 rng(61);
    std::vector<std::vector<int>> triples;
    detail::for_each_subset(detail::range_vec(8), 3, [&](const std::vector<int>& t) {
        triples.push_back(t);
        return true;
    });
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<std::vector<int>> es;
        for (const auto& t : triples)
            if (rng() % 100 < 20) es.push_back(t);
        Hypergraph h(3, 8, es);
        CHECK(h.edge_count() <= count_cliques(pair_shadow(h), 3));
    }
}

TEST_CASE("saturated completion") {
    Graph t = Graph::complete_multipartite({2, 2, 1});
    CHECK(saturated_completion(t, 3) == t);

    Graph empty3(3);
    Graph closed = saturated_completion(empty3, 2);
    CHECK(closed == Graph::from_edges(3, {{0, 1}, {0, 2}}));

    Graph sh = pair_shadow(wheel_blowup_3graph(3, 14));
    Graph shc = saturated_completion(sh, 3);
    CHECK(shc == sh);
    CHECK(count_cliques(shc, 3) == count_cliques(sh, 3));

    CHECK_THROWS(saturated_completion(Graph::complete(4), 3));
}

TEST_CASE("completion is idempotent, grows the input, admits nothing further") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 30) g.add_edge(u, v);
        int l = 2 + static_cast<int>(rng() % 2);
        while (auto w = find_kt(g, l + 1)) g.remove_edge((*w)[0], (*w)[1]);
        Graph c = saturated_completion(g, l);
        CHECK(saturated_completion(c, l) == c);
        for (auto [u, v] : g.edges()) CHECK(c.has_edge(u, v));
        // saturated: every non-edge addition creates K_{l+1}
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (c.has_edge(u, v)) continue;
                Graph cp = c;
                cp.add_edge(u, v);
                CHECK_FALSE(is_kt_free(cp, l + 1));
            }
    }
}
