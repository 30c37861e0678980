#ifndef PRIMEX_MD_TREE_HPP
#define PRIMEX_MD_TREE_HPP

#include <string>
#include <vector>

#include "graph.hpp"

namespace primex {

enum class NodeLabel { Leaf, Empty, Complete, Prime };

const char* to_string(NodeLabel label);

struct MDNode {
    VertexSet vertices;         // a strong module
    NodeLabel label;            // quotient by the children partition
    std::vector<int> children;  // node indices; empty iff Leaf
};

// Inclusion tree of the nonempty strong modules. Internal nodes are exactly
// the strong modules of size >= 2; leaves are the singletons.
struct MDTree {
    std::vector<MDNode> nodes;
    int root = -1;

    const MDNode& at(int i) const { return nodes[static_cast<std::size_t>(i)]; }
    // Index of the node with exactly this vertex set, or -1.
    int find_node(const VertexSet& vs) const;
};

// Builds the decomposition tree top-down: components under a disconnected
// graph, co-components under a disconnected complement, and otherwise the
// maximal proper strong modules recovered through pair closures.
MDTree build_md_tree(const Graph& g);

// The smallest strong module containing w (w nonempty).
VertexSet hat(const MDTree& tree, const VertexSet& w);

enum class CsKind { Clique, Stable };

const char* to_string(CsKind kind);

struct TaggedModule {
    VertexSet vertices;
    CsKind kind;
};

// The maximal modules of size >= 2 that are cliques or stable sets: for each
// internal node labelled Empty or Complete with at least two singleton
// children, the union of those singleton children. Sorted by least vertex.
std::vector<TaggedModule> maximal_cs_modules(const Graph& g, const MDTree& tree);

struct StructureReport {
    int order = 0;
    int alpha_m = 0;  // largest stable-set module (1 when none and order >= 1)
    int omega_m = 0;  // largest clique module
    int iota = 0;     // isolated vertices of g
    int iota_complement = 0;
    std::vector<TaggedModule> max_cs_modules;  // pairwise disjoint
    std::vector<VertexSet> prime_modules;      // modules inducing prime subgraphs
    VertexSet residue;                         // vertices covered by neither family

    int max_modular() const { return alpha_m > omega_m ? alpha_m : omega_m; }
};

StructureReport modular_numbers(const Graph& g, const MDTree& tree);

// Convenience wrapper that builds the tree itself; handles order 0.
StructureReport analyze_structure(const Graph& g);

std::string mdtree_to_json(const MDTree& tree);
std::string mdtree_to_dot(const MDTree& tree);

}  // namespace primex

#endif
