#ifndef PRIMEX_PRIME_BOUND_HPP
#define PRIMEX_PRIME_BOUND_HPP

#include <bit>

#include "graph.hpp"
#include "md_tree.hpp"

namespace primex {

// Ceiling of log2 for positive integers, computed from the bit length so
// power-of-two boundaries are exact.
inline int ceil_log2(int x) {
    return x <= 1 ? 0 : std::bit_width(static_cast<unsigned>(x) - 1);
}

inline bool is_power_of_two(int x) {
    return x > 0 && std::has_single_bit(static_cast<unsigned>(x));
}

enum class BoundCase {
    AlreadyPrime,       // value 0
    NotPowerOfTwo,      // m >= 2 not a power of two: ceil(log2 m)
    PowerOfTwoIsolated, // m = 2^k and an isolated count hits 2^k: k+1
    PowerOfTwoRegular,  // m = 2^k otherwise: k
    AlphaOmegaOne,      // m = 1, not prime, order >= 4: 1
    TinyGraph,          // order <= 1: 4 - order (not covered by the theory)
};

const char* to_string(BoundCase c);

struct PrimeBoundResult {
    int value = 0;
    BoundCase case_tag = BoundCase::TinyGraph;
    // Witness quantities behind the dispatch.
    int m = 0;   // max(alpha_m, omega_m)
    int k = -1;  // log2(m) when m is a power of two, else -1
    int iota = 0;
    int iota_complement = 0;
};

// Minimum number of added vertices over all prime extensions, by closed-form
// case dispatch on the structure report.
PrimeBoundResult prime_bound(const Graph& g);
PrimeBoundResult prime_bound(const Graph& g, const StructureReport& report);

// ceil(log2 m); requires max(alpha_m, omega_m) >= 2.
int lower_bound_modular(const StructureReport& report);
// ceil(log2(max(iota, iota_complement) + 1)); requires some isolated vertex
// in the graph or its complement.
int lower_bound_isolated(const StructureReport& report);
// ceil(log2(m + 1)); requires max(alpha_m, omega_m) >= 2.
int upper_bound_modular(const StructureReport& report);

}  // namespace primex

#endif
