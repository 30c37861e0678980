#include <doctest.h>

#include "errors.hpp"
#include "md_tree.hpp"
#include "modules.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace primex;
using namespace primex::test;

TEST_CASE("exhaustive prime bound on the textbook graphs") {
    OracleVerdict e2 = brute_force_prime_bound(Graph::edgeless(2), 3);
    CHECK(e2.p_value == 2);
    CHECK_FALSE(e2.exceeded_cap);
    REQUIRE(e2.witness.has_value());
    CHECK(e2.witness->added_count == 2);
    CHECK(is_prime(e2.witness->host));
    CHECK(e2.witness->host.induced(VertexSet::of(4, {0, 1})) == Graph::edgeless(2));

    OracleVerdict p4 = brute_force_prime_bound(Graph::path(4), 1);
    CHECK(p4.p_value == 0);
    CHECK(p4.search_space == 1);

    OracleVerdict k4 = brute_force_prime_bound(Graph::complete(4), 3);
    CHECK(k4.p_value == 3);
    CHECK(k4.witness->host.order() == 7);
}

TEST_CASE("oracle runs out of cap gracefully") {
    OracleVerdict v = brute_force_prime_bound(Graph::edgeless(4), 1);
    CHECK(v.exceeded_cap);
    CHECK(v.p_value == -1);
    CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("oracle witnesses are deterministic") {
    OracleVerdict a = brute_force_prime_bound(Graph::edgeless(3), 3);
    OracleVerdict b = brute_force_prime_bound(Graph::edgeless(3), 3);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(a.witness->host == b.witness->host);
    CHECK(a.search_space == b.search_space);
}

TEST_CASE("oracle search guard") {
    CHECK_THROWS_AS(brute_force_prime_bound(Graph::edgeless(12), 3), LimitError);
    CHECK_THROWS_AS(brute_force_prime_bound(Graph::edgeless(8), 3), LimitError);
    CHECK_NOTHROW(brute_force_prime_bound(Graph::path(7), 3));
    CHECK_THROWS_AS(brute_force_prime_bound(Graph::path(4), -1), DomainError);
}

TEST_CASE("exhaustive modular numbers") {
    CHECK(brute_force_modular_numbers(Graph::complete(4)) == std::pair<int, int>{1, 4});
    CHECK(brute_force_modular_numbers(Graph::path(3)) == std::pair<int, int>{2, 1});
    CHECK(brute_force_modular_numbers(Graph::path(4)) == std::pair<int, int>{1, 1});
    CHECK(brute_force_modular_numbers(Graph::edgeless(0)) == std::pair<int, int>{0, 0});
    CHECK_THROWS_AS(brute_force_modular_numbers(Graph::edgeless(17)), LimitError);
}

TEST_CASE("tree-derived numbers agree with the exhaustive scan") {
    for (int n = 1; n <= 5; ++n)
        for_each_labeled_graph(n, [](const Graph& g) {
            StructureReport report = analyze_structure(g);
            auto [alpha, omega] = brute_force_modular_numbers(g);
            CHECK(report.alpha_m == std::max(alpha, g.order() >= 1 ? 1 : 0));
            CHECK(report.omega_m == std::max(omega, g.order() >= 1 ? 1 : 0));
        });
    std::uint64_t seed = 47;
    for (int n : {6, 7})
        for (int i = 0; i < 40; ++i) {
            Graph g = random_graph(n, seed);
            StructureReport report = analyze_structure(g);
            auto [alpha, omega] = brute_force_modular_numbers(g);
            CHECK(report.alpha_m == std::max(alpha, 1));
            CHECK(report.omega_m == std::max(omega, 1));
        }
}

TEST_CASE("sweep guards") {
    CHECK_THROWS_AS(labeled_graph_sweep(7, SweepCheck::FormulaVsOracle), LimitError);
    CHECK_THROWS_AS(labeled_graph_sweep(0, SweepCheck::FormulaVsOracle), DomainError);
    CHECK_THROWS_AS(labeled_graph_sweep(3, SweepCheck::FormulaVsOracle, 0), DomainError);
}

TEST_CASE("sweeps over the small orders are clean") {
    for (SweepCheck c : {SweepCheck::FormulaVsOracle, SweepCheck::TreeVsBruteForce,
                         SweepCheck::ConstructionCertification, SweepCheck::QExtensionContract,
                         SweepCheck::ComplementSymmetry}) {
        SweepSummary s = labeled_graph_sweep(3, c);
        CHECK(s.graph_count == 8);
        CHECK(s.failures.empty());
    }
    SweepSummary s4 = labeled_graph_sweep(4, SweepCheck::FormulaVsOracle);
    CHECK(s4.graph_count == 64);
    CHECK(s4.failures.empty());
}

TEST_CASE("worker count does not change sweep results") {
    SweepSummary one = labeled_graph_sweep(5, SweepCheck::TreeVsBruteForce, 1);
    SweepSummary four = labeled_graph_sweep(5, SweepCheck::TreeVsBruteForce, 4);
    CHECK(one.graph_count == four.graph_count);
    CHECK(one.failures.size() == four.failures.size());
}

TEST_CASE("sweep check names round trip") {
    for (SweepCheck c : {SweepCheck::FormulaVsOracle, SweepCheck::TreeVsBruteForce,
                         SweepCheck::ConstructionCertification, SweepCheck::QExtensionContract,
                         SweepCheck::ComplementSymmetry})
        CHECK(parse_sweep_check(to_string(c)) == c);
    CHECK_THROWS_AS(parse_sweep_check("no-such-check"), DomainError);
}
