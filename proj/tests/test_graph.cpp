#include <doctest.h>

#include "errors.hpp"
#include "graph.hpp"
#include "test_util.hpp"

using namespace primex;
using namespace primex::test;

TEST_CASE("complement of small graphs") {
    CHECK(Graph::complete(4).complement() == Graph::edgeless(4));
    CHECK(Graph::edgeless(0).complement() == Graph::edgeless(0));

    // 2K2 flips to the four missing pairs
    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    Graph c4 = Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(two_k2.complement() == c4);
}

TEST_CASE("complement is an involution and splits the pair count") {
    auto check = [](const Graph& g) {
        CHECK(g.complement().complement() == g);
        long n = g.order();
        CHECK(g.edge_count() + g.complement().edge_count() == n * (n - 1) / 2);
    };
    for (int n = 0; n <= 5; ++n) for_each_labeled_graph(n, check);
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < 50; ++i) check(random_graph(9, seed));
}

TEST_CASE("induced subgraphs") {
    Graph p4 = Graph::path(4);
    CHECK(p4.induced(VertexSet::of(4, {0, 1, 2})) == Graph::path(3));
    CHECK(Graph::complete(4).induced(VertexSet::of(4, {0, 2})) == Graph::complete(2));

    std::vector<int> map;
    Graph sub = p4.induced(VertexSet::of(4, {1, 3}), &map);
    CHECK(map == std::vector<int>{-1, 0, -1, 1});
    CHECK(sub == Graph::edgeless(2));

    std::uint64_t seed = 7;
    for (int i = 0; i < 20; ++i) {
        Graph g = random_graph(8, seed);
        CHECK(g.induced(VertexSet::full(8)) == g);
    }
}

TEST_CASE("induced commutes with complement") {
    std::uint64_t seed = 11;
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(8, seed);
        VertexSet w = VertexSet::from_mask(8, next_rand(seed) & 0xff);
        CHECK(g.induced(w).complement() == g.complement().induced(w));
    }
}

TEST_CASE("induced rejects a mismatched universe") {
    CHECK_THROWS_AS(Graph::path(4).induced(VertexSet::of(5, {0, 1})), DomainError);
}

TEST_CASE("builder rejects bad edges") {
    GraphBuilder b(3);
    CHECK_THROWS_AS(b.add_edge(0, 0), DomainError);
    CHECK_THROWS_AS(b.add_edge(0, 3), DomainError);
    CHECK_THROWS_AS(b.add_edge(-1, 1), DomainError);
}

TEST_CASE("builder appends isolated vertices after the base") {
    Graph p3 = Graph::path(3);
    GraphBuilder b(p3, 2);
    CHECK(b.order() == 5);
    Graph g = b.build();
    CHECK(g.induced(VertexSet::of(5, {0, 1, 2})) == p3);
    CHECK(g.degree(3) == 0);
    CHECK(g.degree(4) == 0);
}

TEST_CASE("edge mask round trip") {
    for_each_labeled_graph(5, [](const Graph& g) {
        CHECK(Graph::from_edge_mask(5, g.edge_mask()) == g);
    });
}

TEST_CASE("vertex set canonical order is size then lex") {
    VertexSet a = VertexSet::of(4, {0});
    VertexSet b = VertexSet::of(4, {3});
    VertexSet c = VertexSet::of(4, {0, 3});
    VertexSet d = VertexSet::of(4, {1, 2});
    CHECK(VertexSet::size_lex_less(a, b));
    CHECK(VertexSet::size_lex_less(b, c));
    CHECK(VertexSet::size_lex_less(c, d));
    CHECK_FALSE(VertexSet::size_lex_less(d, c));
    CHECK_FALSE(VertexSet::size_lex_less(a, a));
}
