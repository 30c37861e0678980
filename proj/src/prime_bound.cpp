#include "prime_bound.hpp"

#include "errors.hpp"
#include "modules.hpp"

namespace primex {

const char* to_string(BoundCase c) {
    switch (c) {
        case BoundCase::AlreadyPrime: return "already-prime";
        case BoundCase::NotPowerOfTwo: return "not-power-of-two";
        case BoundCase::PowerOfTwoIsolated: return "power-of-two-isolated";
        case BoundCase::PowerOfTwoRegular: return "power-of-two-regular";
        case BoundCase::AlphaOmegaOne: return "alpha-omega-one";
        case BoundCase::TinyGraph: return "tiny-graph";
    }
    return "?";
}

int lower_bound_modular(const StructureReport& report) {
    int m = report.max_modular();
    if (m < 2) throw DomainError("lower_bound_modular requires max(alpha_m, omega_m) >= 2");
    return ceil_log2(m);
}

int lower_bound_isolated(const StructureReport& report) {
    int i = std::max(report.iota, report.iota_complement);
    if (i < 1)
        throw DomainError("lower_bound_isolated requires an isolated vertex in g or its complement");
    return ceil_log2(i + 1);
}

int upper_bound_modular(const StructureReport& report) {
    int m = report.max_modular();
    if (m < 2) throw DomainError("upper_bound_modular requires max(alpha_m, omega_m) >= 2");
    return ceil_log2(m + 1);
}

PrimeBoundResult prime_bound(const Graph& g, const StructureReport& report) {
    int n = g.order();
    PrimeBoundResult r;
    r.m = report.max_modular();
    r.iota = report.iota;
    r.iota_complement = report.iota_complement;
    if (is_power_of_two(r.m)) r.k = std::bit_width(static_cast<unsigned>(r.m)) - 1;

    if (is_prime(g)) {
        r.value = 0;
        r.case_tag = BoundCase::AlreadyPrime;
        return r;
    }
    if (n <= 1) {
        // The smallest prime graph has 4 vertices; a path completion always works.
        r.value = 4 - n;
        r.case_tag = BoundCase::TinyGraph;
        return r;
    }
    if (r.m >= 2) {
        if (!is_power_of_two(r.m)) {
            r.value = ceil_log2(r.m);
            r.case_tag = BoundCase::NotPowerOfTwo;
        } else if (r.iota == r.m || r.iota_complement == r.m) {
            r.value = r.k + 1;
            r.case_tag = BoundCase::PowerOfTwoIsolated;
        } else {
            r.value = r.k;
            r.case_tag = BoundCase::PowerOfTwoRegular;
        }
        return r;
    }
    // Every graph on 2 or 3 vertices has a clique or stable module of size >= 2.
    if (n < 4)
        throw VerifyError("prime_bound: non-prime graph of order " + std::to_string(n) +
                          " reported max modular number 1");
    r.value = 1;
    r.case_tag = BoundCase::AlphaOmegaOne;
    return r;
}

PrimeBoundResult prime_bound(const Graph& g) {
    return prime_bound(g, analyze_structure(g));
}

}  // namespace primex
