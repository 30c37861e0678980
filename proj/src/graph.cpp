#include "graph.hpp"

#include <string>

#include "errors.hpp"

namespace primex {

namespace {
void check_order(int n) {
    if (n < 0) throw DomainError("graph order must be non-negative");
}

long pair_count(int n) { return static_cast<long>(n) * (n - 1) / 2; }
}  // namespace

Graph Graph::edgeless(int n) {
    check_order(n);
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    return g;
}

Graph Graph::complete(int n) {
    Graph g = edgeless(n);
    for (int v = 0; v < n; ++v) {
        g.adj_[static_cast<std::size_t>(v)] = VertexSet::full(n);
        g.adj_[static_cast<std::size_t>(v)].erase(v);
    }
    return g;
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return from_edges(n, edges);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
    check_order(n);
    if (pair_count(n) > 64) throw DomainError("from_edge_mask requires C(n,2) <= 64");
    GraphBuilder b(n);
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((mask >> bit) & 1) b.add_edge(u, v);
    return b.build();
}

long Graph::edge_count() const {
    long twice = 0;
    for (const auto& row : adj_) twice += row.size();
    return twice / 2;
}

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw DomainError("vertex id out of range");
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

Graph Graph::complement() const {
    Graph g;
    g.n_ = n_;
    g.adj_.reserve(adj_.size());
    for (int v = 0; v < n_; ++v) {
        VertexSet row = adj_[static_cast<std::size_t>(v)].complement();
        row.erase(v);
        g.adj_.push_back(std::move(row));
    }
    return g;
}

Graph Graph::induced(const VertexSet& w, std::vector<int>* old_to_new) const {
    if (w.universe() != n_)
        throw DomainError("induced subgraph: vertex set universe " +
                          std::to_string(w.universe()) + " does not match order " +
                          std::to_string(n_));
    std::vector<int> keep = w.to_vector();
    std::vector<int> map(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) map[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);

    GraphBuilder b(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        const VertexSet& row = adj_[static_cast<std::size_t>(keep[i])];
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (row.contains(keep[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    if (old_to_new) *old_to_new = std::move(map);
    return b.build();
}

std::uint64_t Graph::edge_mask() const {
    if (pair_count(n_) > 64) throw DomainError("edge_mask requires C(n,2) <= 64");
    std::uint64_t mask = 0;
    int bit = 0;
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (adj_[static_cast<std::size_t>(u)].contains(v)) mask |= std::uint64_t{1} << bit;
    return mask;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
    check_order(n);
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

GraphBuilder::GraphBuilder(const Graph& g, int extra) : n_(g.order() + extra) {
    if (extra < 0) throw DomainError("extra vertex count must be non-negative");
    adj_.assign(static_cast<std::size_t>(n_), VertexSet(n_));
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v)) adj_[static_cast<std::size_t>(v)].insert(u);
}

bool GraphBuilder::adjacent(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw DomainError("vertex id out of range");
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loops are not allowed");
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
}

void GraphBuilder::remove_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw DomainError("edge endpoint out of range");
    adj_[static_cast<std::size_t>(u)].erase(v);
    adj_[static_cast<std::size_t>(v)].erase(u);
}

void GraphBuilder::set_edge(int u, int v, bool present) {
    if (present)
        add_edge(u, v);
    else
        remove_edge(u, v);
}

Graph GraphBuilder::build() const {
    Graph g;
    g.n_ = n_;
    g.adj_ = adj_;
    return g;
}

}  // namespace primex
