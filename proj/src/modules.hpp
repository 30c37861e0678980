#ifndef PRIMEX_MODULES_HPP
#define PRIMEX_MODULES_HPP

#include <vector>

#include "graph.hpp"

namespace primex {

// Largest order accepted by the exhaustive subset enumerations.
constexpr int kExhaustiveCap = 16;

// True iff every vertex outside m sees all of m or none of it. The empty
// set, singletons and the full vertex set are always modules.
bool is_module(const Graph& g, const VertexSet& m);

// Restriction of is_module to the induced subgraph on `domain` (m must be
// a subset of domain); avoids materialising the subgraph.
bool is_module_within(const Graph& g, const VertexSet& domain, const VertexSet& m);

// The inclusion-minimal module containing `seed`, obtained by repeatedly
// absorbing the lowest-index splitter until the set stabilises. Well-defined
// because the modules containing a fixed set are closed under intersection.
VertexSet smallest_module_containing(const Graph& g, const VertexSet& seed);

// Same closure inside the induced subgraph on `domain`.
VertexSet smallest_module_within(const Graph& g, const VertexSet& domain, const VertexSet& seed);

// Order >= 4 and all modules trivial, decided by pair closures.
bool is_prime(const Graph& g);

// All modules of g, in ascending characteristic-mask order; includes the
// empty set. Refuses orders above `cap`.
std::vector<VertexSet> enumerate_modules(const Graph& g, int cap = kExhaustiveCap);

struct Quotient {
    Graph graph;                    // one vertex per block, in block order
    std::vector<VertexSet> blocks;  // vertex i of `graph` stands for blocks[i]
};

// Quotient of g by a modular partition. Throws DomainError naming the
// offending block when the input is not a modular partition.
Quotient quotient(const Graph& g, const std::vector<VertexSet>& blocks);

}  // namespace primex

#endif
