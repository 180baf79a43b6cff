#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hgsat/constructions.hpp"
#include "hgsat/io.hpp"

using namespace hgsat;

TEST_CASE("parse a minimal file") {
    Hypergraph h = parse_hypergraph("p hgr 3 4 1\n1 2 3\n");
    CHECK(h.r == 3);
    CHECK(h.n == 4);
    CHECK(h.edges == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("comments and unordered edges normalize") {
    Hypergraph h = parse_hypergraph("c a comment\np hgr 3 5 2\n3 2 1\nc another\n5 4 3\n");
    CHECK(emit_hypergraph(h) == "p hgr 3 5 2\n1 2 3\n3 4 5\n");
}

TEST_CASE("emit of a generator output is canonical") {
    std::string text = emit_hypergraph(turan_hypergraph(5, 3, 3));
    CHECK(text == "p hgr 3 5 4\n1 3 5\n1 4 5\n2 3 5\n2 4 5\n");
    CHECK(emit_hypergraph(parse_hypergraph(text)) == text);
}

TEST_CASE("round trip on random instances") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        std::vector<std::vector<int>> es;
        detail::for_each_subset(detail::range_vec(n), 3, [&](const std::vector<int>& t) {
            if (rng() % 100 < 30) es.push_back(t);
            return true;
        });
        Hypergraph h(3, n, es);
        CHECK(parse_hypergraph(emit_hypergraph(h)) == h);
    }
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH(parse_hypergraph("p hgr 3 3 1\n1 2 4\n"),
                      Catch::Matchers::ContainsSubstring("line 2: vertex 4 out of range (n=3)"));
    CHECK_THROWS_WITH(parse_hypergraph("p hgr 3 4 1\n1 2\n"),
                      Catch::Matchers::ContainsSubstring("expected 3 vertices, got 2"));
    CHECK_THROWS_WITH(parse_hypergraph("p graph 3 4 1\n1 2 3\n"),
                      Catch::Matchers::ContainsSubstring("line 1"));
    CHECK_THROWS_WITH(parse_hypergraph("p hgr 3 4 2\n1 2 3\n"),
                      Catch::Matchers::ContainsSubstring("expected 2 edge lines, got 1"));
    CHECK_THROWS_WITH(parse_hypergraph("p hgr 3 4 1\n1 2 3\n1 2 4\n"),
                      Catch::Matchers::ContainsSubstring("more than 1 edge lines"));
    CHECK_THROWS_WITH(parse_hypergraph("p hgr 3 4 1\n1 1 2\n"),
                      Catch::Matchers::ContainsSubstring("repeated vertex"));
    CHECK_THROWS_WITH(parse_hypergraph("p hgr 1 4 0\n"),
                      Catch::Matchers::ContainsSubstring("uniformity"));
    CHECK_THROWS(parse_hypergraph(""));
}

TEST_CASE("dot rendering") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(to_dot(g) == "graph G {\n  1;\n  2;\n  3;\n  1 -- 2;\n  2 -- 3;\n}\n");
}

TEST_CASE("digest is stable") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("p hgr 3 4 1\n1 2 3\n") == fnv1a_hex("p hgr 3 4 1\n1 2 3\n"));
    CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
}
