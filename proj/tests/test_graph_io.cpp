#include <doctest.h>

#include "errors.hpp"
#include "graph_io.hpp"
#include "test_util.hpp"

using namespace primex;
using namespace primex::test;

TEST_CASE("graph6 decoding of the reference strings") {
    CHECK(parse_graph6("Ch") == Graph::path(4));
    CHECK(parse_graph6("C~") == Graph::complete(4));
    CHECK(parse_graph6("C?") == Graph::edgeless(4));
    CHECK(parse_graph6("?") == Graph::edgeless(0));
    CHECK(parse_graph6("Ch\n") == Graph::path(4));
}

TEST_CASE("graph6 encoding of the reference graphs") {
    CHECK(emit_graph6(Graph::path(4)) == "Ch");
    CHECK(emit_graph6(Graph::complete(4)) == "C~");
    CHECK(emit_graph6(Graph::edgeless(4)) == "C?");
    CHECK(emit_graph6(Graph::edgeless(0)) == "?");
}

TEST_CASE("graph6 round trip is exact") {
    for (int n = 0; n <= 6; ++n)
        for_each_labeled_graph(n, [](const Graph& g) {
            std::string text = emit_graph6(g);
            CHECK(parse_graph6(text) == g);
            CHECK(emit_graph6(parse_graph6(text)) == text);
        });
    std::uint64_t seed = 99;
    for (int n : {7, 8, 20, 62})
        for (int i = 0; i < 20; ++i) {
            GraphBuilder b(n);
            for (int e = 0; e < 2 * n; ++e) {
                int u = static_cast<int>(next_rand(seed) % static_cast<std::uint64_t>(n));
                int v = static_cast<int>(next_rand(seed) % static_cast<std::uint64_t>(n));
                if (u != v) b.add_edge(u, v);
            }
            Graph g = b.build();
            CHECK(parse_graph6(emit_graph6(g)) == g);
        }
}

TEST_CASE("graph6 parse errors carry a byte offset") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("~??"), ParseError);  // long form unsupported
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);    // truncated body
    CHECK_THROWS_AS(parse_graph6("\x1f"), ParseError); // header below range

    try {
        parse_graph6("Chh");
        FAIL("expected trailing garbage to be rejected");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
    // order 2 uses one payload bit; '@' sets a padding bit
    CHECK_THROWS_AS(parse_graph6("A@"), ParseError);
    CHECK(parse_graph6("A_") == Graph::complete(2));
}

TEST_CASE("graph6 emission refuses orders above 62") {
    CHECK_THROWS_AS(emit_graph6(Graph::edgeless(63)), DomainError);
    CHECK(emit_graph6(Graph::edgeless(62)).size() ==
          1 + (62u * 61u / 2u + 5u) / 6u);
}

TEST_CASE("edge list parsing") {
    CHECK(parse_edge_list("n 4\n0 1\n1 2\n2 3\n") == Graph::path(4));
    CHECK(parse_edge_list("n 3\n") == Graph::edgeless(3));
    CHECK(parse_edge_list("n 2\n0 1\n1 0\n") == Graph::complete(2));
    CHECK(parse_edge_list("n 2\n\n0 1\n") == Graph::complete(2));
}

TEST_CASE("edge list errors carry a line number") {
    try {
        parse_edge_list("n 3\n0 1\n2 2\n");
        FAIL("expected a self-loop error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
    }
    try {
        parse_edge_list("n 3\n0 7\n");
        FAIL("expected an out-of-range error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
    CHECK_THROWS_AS(parse_edge_list("n 3\nx y\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 3\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 3\n0 1 2\n"), ParseError);
}

TEST_CASE("autodetection picks the right parser") {
    CHECK(parse_graph_auto("n 3\n0 1\n") == Graph::from_edges(3, {{0, 1}}));
    CHECK(parse_graph_auto("Ch") == Graph::path(4));
    CHECK(parse_graph_auto("\nCh\n") == Graph::path(4));
}
