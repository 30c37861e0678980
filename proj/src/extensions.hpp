#ifndef PRIMEX_EXTENSIONS_HPP
#define PRIMEX_EXTENSIONS_HPP

#include <vector>

#include "graph.hpp"

namespace primex {

enum class ConstructionTag {
    Identity,             // input already prime, nothing added
    PathEmbed,            // order <= 1 completed to a 4-path
    StableStable,         // stable base part + stable auxiliary part
    CliqueStable,         // clique base part + stable auxiliary part
    ApexPair,             // two non-adjacent apexes over a prime graph
    RecursiveStable,      // recursive stable-set extension over the root partition
    RecursiveStableMerge, // recursive extension merged with a degenerate part
    ApexPairSplitter,     // one apex splitting every 2-element clique/stable module
    ApexPrimeParts,       // one apex extending every prime module
    PeelReattach,         // peel one vertex per maximum module, extend, reattach
    OracleSearch,         // witness found by exhaustive search
};

const char* to_string(ConstructionTag tag);

struct ExtensionCertificate {
    Graph host;
    int base_order = 0;  // original vertices are [0, base_order)
    int added_count = 0; // added vertices are [base_order, base_order + added_count)
    ConstructionTag tag = ConstructionTag::Identity;
    bool verified_prime = false;
    bool stable_added_set = false;

    VertexSet added_set() const;
};

struct VerifyPolicy {
    int closure_cap = 64;    // run the closure primality check up to this order
    int exhaustive_cap = 16; // additionally cross-check by subset enumeration
};

// Primality verification per the policy. Returns false (without error) when
// the host is too large for the closure check; raises VerifyError if the two
// checks disagree.
bool verify_certificate_prime(const ExtensionCertificate& cert, VerifyPolicy policy = {});

// Wraps a host graph into a certificate: computes the added-set fields,
// checks the extension property against `base`, and runs verification.
ExtensionCertificate certify_extension(Graph host, const Graph& base, ConstructionTag tag);

// Prime graph on s_size + ceil(log2(s_size + 1)) vertices whose parts
// [0, s_size) and the rest are both stable sets.
Graph stable_stable_prime(int s_size);

// Prime graph on c_size + ceil(log2(c_size + 1)) vertices with [0, c_size) a
// clique and the rest a stable set.
Graph clique_stable_prime(int c_size);

// All neighborhoods N for a new vertex that keep a prime graph prime:
// every subset except the empty set, the full set, and the (closed)
// neighborhoods of existing vertices. Sorted by size, then lexicographically.
std::vector<VertexSet> prime_one_extensions(const Graph& g);

// Extension of a prime graph by two non-adjacent vertices carrying the two
// smallest admissible neighborhoods; the result is prime.
ExtensionCertificate prime_two_extension_nonadjacent(const Graph& g);

// Prime extension whose added vertices form a stable set, sized by the
// recursion over the decomposition tree (at most ceil(log2(max+1)) added
// when the maximum clique/stable module has size max >= 2).
ExtensionCertificate q_extension(const Graph& g);

enum class ApexMode {
    PairSplitter,  // requires max(alpha_m, omega_m) = 2 and no isolated count of 2
    PrimeParts,    // requires a non-prime graph, order >= 4, alpha_m = omega_m = 1
};

// Prime 1-extension by a single apex vertex.
ExtensionCertificate one_extension_special(const Graph& g, ApexMode mode);

// Prime k-extension when max(alpha_m, omega_m) = 2^k, k >= 2, and neither
// isolated count equals 2^k.
ExtensionCertificate power_of_two_extension(const Graph& g);

// Certified prime extension with exactly prime_bound(g).value added vertices.
ExtensionCertificate optimal_extension(const Graph& g);

}  // namespace primex

#endif
