#ifndef PRIMEX_ORACLE_HPP
#define PRIMEX_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extensions.hpp"
#include "graph.hpp"
#include "modules.hpp"

namespace primex {

// Default ceiling on log2 of the per-level extension search space.
constexpr int kOracleGuardBits = 24;

struct OracleVerdict {
    int p_value = -1;  // -1 when the cap was exhausted without a prime extension
    bool exceeded_cap = false;
    std::optional<ExtensionCertificate> witness;
    std::uint64_t search_space = 0;  // candidates examined across all levels
};

// Ground truth by exhaustive search: for p = 0, 1, ..., p_cap enumerate every
// labelled p-extension (neighborhood assignments and added-added edge
// patterns, in lexicographic counter order) and return the first p admitting
// a prime one. Refuses when n*p_cap + C(p_cap,2) exceeds guard_bits.
OracleVerdict brute_force_prime_bound(const Graph& g, int p_cap,
                                      int guard_bits = kOracleGuardBits);

// (alpha_m, omega_m) by scanning all subsets; refuses orders above cap.
std::pair<int, int> brute_force_modular_numbers(const Graph& g, int cap = kExhaustiveCap);

enum class SweepCheck {
    FormulaVsOracle,            // prime_bound == brute_force_prime_bound
    TreeVsBruteForce,           // tree internal nodes and cs-modules vs enumeration
    ConstructionCertification,  // optimal_extension is prime and optimally sized
    QExtensionContract,         // stable added set, prime host, size within bound
    ComplementSymmetry,         // primality and bound invariant under complement
};

const char* to_string(SweepCheck check);
SweepCheck parse_sweep_check(const std::string& name);

struct SweepFailure {
    std::string graph6;
    std::string check;
    std::string expected;
    std::string actual;
};

struct SweepSummary {
    int order = 0;
    SweepCheck check = SweepCheck::FormulaVsOracle;
    std::uint64_t graph_count = 0;
    std::vector<SweepFailure> failures;
};

// Runs `check` over every labelled graph of the given order (at most 6).
// Workers split the edge-mask range; failures are reported in mask order
// regardless of the schedule.
SweepSummary labeled_graph_sweep(int order, SweepCheck check, int jobs = 1);

}  // namespace primex

#endif
