#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "hgsat/cliques.hpp"
#include "hgsat/constructions.hpp"
#include "hgsat/hypergraph.hpp"

using namespace hgsat;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Subset-enumeration oracle for clique counts.
long long count_by_subsets(const Graph& g, int t) {
    long long c = 0;
    detail::for_each_subset(detail::range_vec(g.order()), t, [&](const std::vector<int>& s) {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (!g.has_edge(s[i], s[j])) return true;
        ++c;
        return true;
    });
    return c;
}

Graph c5() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

bool is_clique(const Graph& g, const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

} // namespace

TEST_CASE("clique counts on named graphs") {
    CHECK(count_cliques(Graph::complete(4), 3) == 4);
    CHECK(count_cliques(c5(), 3) == 0);
    CHECK(count_cliques(Graph::complete_multipartite({2, 2, 1}), 3) == 4);
    CHECK(count_cliques(Graph::complete(6), 1) == 6);
    CHECK_THROWS(count_cliques(c5(), 0));
}

TEST_CASE("clique counts match the subset oracle") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + trial % 7;
        Graph g = random_graph(n, 0.5, rng);
        for (int t = 1; t <= std::min(n, 6); ++t)
            CHECK(count_cliques(g, t) == count_by_subsets(g, t));
    }
}

TEST_CASE("removing an edge never increases a clique count") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(8, 0.6, rng);
        auto es = g.edges();
        if (es.empty()) continue;
        auto [u, v] = es[rng() % es.size()];
        Graph h = g;
        h.remove_edge(u, v);
        for (int t = 2; t <= 5; ++t) CHECK(count_cliques(h, t) <= count_cliques(g, t));
    }
}

TEST_CASE("freeness with witnesses") {
    CHECK(is_kt_free(c5(), 3));
    Graph k222 = Graph::complete_multipartite({2, 2, 2});
    CHECK(is_kt_free(k222, 4));
    auto w = find_kt(k222, 3);
    REQUIRE(w.has_value());
    CHECK(w->size() == 3);
    CHECK(is_clique(k222, *w));

    CHECK(is_kt_free(wheel(3, 1).graph, 4));
}

TEST_CASE("t_plus") {
    CHECK(t_plus(Graph::complete(4)) == 2);
    CHECK_FALSE(t_plus(c5()).has_value());

    // per-edge recount on random graphs
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(9, 0.5, rng);
        auto tp = t_plus(g);
        std::optional<long long> expect;
        for (auto [u, v] : g.edges()) {
            long long tri = 0;
            for (int w = 0; w < 9; ++w)
                if (w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w)) ++tri;
            if (tri >= 1 && (!expect || tri < *expect)) expect = tri;
        }
        CHECK(tp == expect);
    }
}

TEST_CASE("t_plus of the blowup shadow equals the co-degree minimum") {
    Hypergraph h = wheel_blowup_3graph(3, 14);
    CHECK(t_plus(pair_shadow(h)) == 4);
    CHECK(codegree_profile(h).min_positive == 4);
}

TEST_CASE("clique chain on named graphs") {
    auto [ck3, ok3] = fisher_ryan_check(Graph::complete(3), 3);
    CHECK(ok3);
    CHECK(ck3.counts == std::vector<long long>{3, 3, 1});
    // a complete graph saturates the whole chain
    for (int i = 1; i < 3; ++i) {
        CHECK(root_leq(ck3.k(i + 1), binomial(3, i + 1), i + 1, ck3.k(i), binomial(3, i), i));
        CHECK(root_leq(ck3.k(i), binomial(3, i), i, ck3.k(i + 1), binomial(3, i + 1), i + 1));
    }

    auto [c5c, ok5] = fisher_ryan_check(c5(), 2);
    CHECK(ok5);
    CHECK(c5c.counts == std::vector<long long>{5, 5});

    auto [tc, okt] = fisher_ryan_check(Graph::complete_multipartite({2, 2, 2}), 3);
    CHECK(okt);
    CHECK(tc.counts == std::vector<long long>{6, 12, 8});

    CHECK_THROWS_WITH(fisher_ryan_check(Graph::complete(4), 3),
                      Catch::Matchers::ContainsSubstring("contains K_4"));
}

TEST_CASE("clique chain on random free graphs") {
    std::mt19937 rng(41);
    for (int l : {3, 4}) {
        for (int trial = 0; trial < 100; ++trial) {
            int n = 5 + static_cast<int>(rng() % 8);
            Graph g = random_graph(n, 0.55, rng);
            while (auto w = find_kt(g, l + 1)) {
                int i = static_cast<int>(rng() % w->size());
                int j = static_cast<int>(rng() % w->size());
                while (j == i) j = static_cast<int>(rng() % w->size());
                g.remove_edge((*w)[i], (*w)[j]);
            }
            auto [cc, ok] = fisher_ryan_check(g, l);
            CHECK(ok);
            CHECK(cc.k(1) == n);
            CHECK(cc.k(2) == g.size());
        }
    }
}

TEST_CASE("common neighborhood") {
    CHECK(common_neighborhood(Graph::complete(4), {0, 1}) == std::vector<int>{2, 3});
    CHECK(common_neighborhood(c5(), {0, 2}) == std::vector<int>{1});
    Graph t = Graph::complete_multipartite({2, 2, 1});
    CHECK(common_neighborhood(t, {0, 1}) == std::vector<int>{2, 3, 4});
    CHECK_THROWS(common_neighborhood(t, {}));
}
