#ifndef PRIMEX_GRAPH_HPP
#define PRIMEX_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace primex {

class GraphBuilder;

// Immutable simple graph over dense vertex ids [0, n). Adjacency is stored
// as one VertexSet row per vertex; the relation is symmetric and irreflexive.
class Graph {
public:
    Graph() = default;

    static Graph edgeless(int n);
    static Graph complete(int n);
    static Graph path(int n);  // edges {i, i+1}
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    // Bits of `mask` are edges in the pair order (0,1),(0,2),(1,2),(0,3),...
    // with bit 0 the first pair. Requires C(n,2) <= 64.
    static Graph from_edge_mask(int n, std::uint64_t mask);

    int order() const { return n_; }
    long edge_count() const;
    bool adjacent(int u, int v) const;
    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return neighbors(v).size(); }

    Graph complement() const;
    // Subgraph induced by w. If old_to_new is given it receives a vector of
    // length order() with the new index of each kept vertex and -1 elsewhere;
    // kept vertices are renumbered in ascending order.
    Graph induced(const VertexSet& w, std::vector<int>* old_to_new = nullptr) const;

    std::uint64_t edge_mask() const;  // inverse of from_edge_mask; C(n,2) <= 64

    bool operator==(const Graph& other) const;
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    friend class GraphBuilder;

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// Mutable staging area for assembling a Graph; graphs themselves stay
// immutable values.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    // Copy of g with `extra` isolated vertices appended at ids n, n+1, ...
    GraphBuilder(const Graph& g, int extra);

    int order() const { return n_; }
    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void set_edge(int u, int v, bool present);

    Graph build() const;

private:
    int n_;
    std::vector<VertexSet> adj_;
};

}  // namespace primex

#endif
