#include <doctest.h>

#include <algorithm>

#include "errors.hpp"
#include "modules.hpp"
#include "test_util.hpp"

using namespace primex;
using namespace primex::test;

TEST_CASE("is_module on the textbook cases") {
    Graph p3 = Graph::path(3);
    Graph p4 = Graph::path(4);
    CHECK(is_module(p3, VertexSet::of(3, {0, 2})));
    CHECK_FALSE(is_module(p4, VertexSet::of(4, {1, 2})));
    CHECK(is_module(p4, VertexSet(4)));
    CHECK(is_module(p4, VertexSet::full(4)));
    CHECK(is_module(p4, VertexSet::single(4, 2)));
}

TEST_CASE("smallest module closure") {
    Graph p4 = Graph::path(4);
    CHECK(smallest_module_containing(p4, VertexSet::of(4, {1, 2})) == VertexSet::full(4));
    Graph p3 = Graph::path(3);
    CHECK(smallest_module_containing(p3, VertexSet::of(3, {0, 2})) == VertexSet::of(3, {0, 2}));
    CHECK(smallest_module_containing(p4, VertexSet::single(4, 1)) == VertexSet::single(4, 1));
    CHECK_THROWS_AS(smallest_module_containing(p4, VertexSet(4)), DomainError);
}

TEST_CASE("closure returns the inclusion-minimal module") {
    // oracle: scan the full module list for the smallest superset
    auto check = [](const Graph& g) {
        std::vector<VertexSet> mods = enumerate_modules(g);
        int n = g.order();
        for (std::uint64_t seed_mask = 1; seed_mask < (std::uint64_t{1} << n); ++seed_mask) {
            VertexSet seed = VertexSet::from_mask(n, seed_mask);
            VertexSet got = smallest_module_containing(g, seed);
            CHECK(is_module(g, got));
            CHECK(seed.is_subset_of(got));
            for (const VertexSet& m : mods)
                if (seed.is_subset_of(m)) CHECK(got.is_subset_of(m));
        }
    };
    for (int n = 1; n <= 4; ++n) for_each_labeled_graph(n, check);
    std::uint64_t seed = 21;
    for (int i = 0; i < 20; ++i) check(random_graph(6, seed));
}

TEST_CASE("primality of the textbook cases") {
    CHECK(is_prime(Graph::path(4)));
    CHECK_FALSE(is_prime(Graph::complete(4)));
    CHECK_FALSE(is_prime(Graph::path(3)));
    CHECK_FALSE(is_prime(Graph::edgeless(0)));
    for (int n = 4; n <= 10; ++n) CHECK(is_prime(Graph::path(n)));
}

TEST_CASE("primality agrees with subset enumeration") {
    auto nontrivial_module_free = [](const Graph& g) {
        for (const VertexSet& m : enumerate_modules(g))
            if (m.size() >= 2 && m.size() < g.order()) return false;
        return true;
    };
    for (int n = 1; n <= 5; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            CHECK(is_prime(g) == (g.order() >= 4 && nontrivial_module_free(g)));
        });
    std::uint64_t seed = 33;
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(7, seed);
        CHECK(is_prime(g) == nontrivial_module_free(g));
        CHECK(is_prime(g) == is_prime(g.complement()));
    }
}

TEST_CASE("module enumeration on the textbook cases") {
    std::vector<VertexSet> p4 = enumerate_modules(Graph::path(4));
    CHECK(p4.size() == 6);  // empty, four singletons, full

    std::vector<VertexSet> k2 = enumerate_modules(Graph::complete(2));
    CHECK(k2.size() == 4);

    // empty, three singletons, {0,2}, and the full set
    std::vector<VertexSet> p3 = enumerate_modules(Graph::path(3));
    CHECK(p3.size() == 6);
    CHECK(std::count(p3.begin(), p3.end(), VertexSet::of(3, {0, 2})) == 1);

    CHECK_THROWS_AS(enumerate_modules(Graph::edgeless(17)), LimitError);
}

TEST_CASE("module restriction: M cap W is a module of the induced subgraph") {
    auto check = [](const Graph& g, const VertexSet& w) {
        std::vector<int> map;
        Graph sub = g.induced(w, &map);
        for (const VertexSet& m : enumerate_modules(g)) {
            VertexSet inter = m & w;
            VertexSet local(sub.order());
            for (int v : inter) local.insert(map[static_cast<std::size_t>(v)]);
            CHECK(is_module(sub, local));
        }
    };
    for (int n = 1; n <= 4; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            for (std::uint64_t wm = 0; wm < (std::uint64_t{1} << n); ++wm)
                check(g, VertexSet::from_mask(n, wm));
        });
    std::uint64_t seed = 55;
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(7, seed);
        check(g, VertexSet::from_mask(7, next_rand(seed) & 0x7f));
    }
}

TEST_CASE("modules of a module are the contained modules") {
    auto check = [](const Graph& g) {
        std::vector<VertexSet> mods = enumerate_modules(g);
        for (const VertexSet& m : mods) {
            if (m.empty()) continue;
            std::vector<int> map;
            Graph sub = g.induced(m, &map);
            std::vector<int> back = m.to_vector();
            std::vector<std::uint64_t> inner;
            for (const VertexSet& s : enumerate_modules(sub)) {
                VertexSet lifted(g.order());
                for (int v : s) lifted.insert(back[static_cast<std::size_t>(v)]);
                inner.push_back(lifted.to_mask());
            }
            std::vector<std::uint64_t> expected;
            for (const VertexSet& s : mods)
                if (s.is_subset_of(m)) expected.push_back(s.to_mask());
            std::sort(inner.begin(), inner.end());
            std::sort(expected.begin(), expected.end());
            CHECK(inner == expected);
        }
    };
    for (int n = 1; n <= 4; ++n) for_each_labeled_graph(n, check);
    std::uint64_t seed = 77;
    for (int i = 0; i < 20; ++i) check(random_graph(6, seed));
}

TEST_CASE("disjoint modules see each other uniformly") {
    auto check = [](const Graph& g) {
        std::vector<VertexSet> mods = enumerate_modules(g);
        for (const VertexSet& m : mods)
            for (const VertexSet& other : mods) {
                if (m.empty() || other.empty() || m.intersects(other)) continue;
                bool first = g.adjacent(m.first(), other.first());
                for (int u : m)
                    for (int v : other) CHECK(g.adjacent(u, v) == first);
            }
    };
    for (int n = 2; n <= 4; ++n) for_each_labeled_graph(n, check);
    std::uint64_t seed = 101;
    for (int i = 0; i < 20; ++i) check(random_graph(6, seed));
}

TEST_CASE("quotient of the textbook cases") {
    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    std::vector<VertexSet> blocks = {VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3})};
    CHECK(quotient(two_k2, blocks).graph == Graph::edgeless(2));

    CHECK(quotient(Graph::complete(4), blocks).graph == Graph::complete(2));

    Graph p4 = Graph::path(4);
    std::vector<VertexSet> singletons;
    for (int v = 0; v < 4; ++v) singletons.push_back(VertexSet::single(4, v));
    CHECK(quotient(p4, singletons).graph == p4);
}

TEST_CASE("quotient rejects a non-partition and names the offending block") {
    Graph p4 = Graph::path(4);
    std::vector<VertexSet> bad = {VertexSet::of(4, {1, 2}), VertexSet::of(4, {0, 3})};
    try {
        quotient(p4, bad);
        FAIL("expected a non-module block to be rejected");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("block 0") != std::string::npos);
    }
    std::vector<VertexSet> overlapping = {VertexSet::of(4, {0, 1}), VertexSet::of(4, {1, 2, 3})};
    CHECK_THROWS_AS(quotient(Graph::complete(4), overlapping), DomainError);
    std::vector<VertexSet> missing = {VertexSet::of(4, {0, 1})};
    CHECK_THROWS_AS(quotient(Graph::complete(4), missing), DomainError);
    std::vector<VertexSet> with_empty = {VertexSet::full(4), VertexSet(4)};
    CHECK_THROWS_AS(quotient(Graph::complete(4), with_empty), DomainError);
}

TEST_CASE("closure is deterministic") {
    std::uint64_t seed = 2024;
    for (int i = 0; i < 20; ++i) {
        Graph g = random_graph(8, seed);
        VertexSet s = VertexSet::from_mask(8, (next_rand(seed) & 0xfe) | 1);
        CHECK(smallest_module_containing(g, s) == smallest_module_containing(g, s));
    }
}
