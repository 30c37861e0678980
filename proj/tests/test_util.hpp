#ifndef PRIMEX_TEST_UTIL_HPP
#define PRIMEX_TEST_UTIL_HPP

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace primex::test {

// Deterministic xorshift; property tests must be reproducible.
inline std::uint64_t next_rand(std::uint64_t& state) {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
}

inline Graph random_graph(int n, std::uint64_t& state) {
    int bits = n * (n - 1) / 2;
    std::uint64_t mask = next_rand(state);
    if (bits < 64) mask &= (std::uint64_t{1} << bits) - 1;
    return Graph::from_edge_mask(n, mask);
}

// All 2^C(n,2) labelled graphs of order n, in edge-mask order.
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) fn(Graph::from_edge_mask(n, mask));
}

inline std::vector<int> degree_multiset(const Graph& g) {
    std::vector<int> degs;
    for (int v = 0; v < g.order(); ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end());
    return degs;
}

// A connected graph whose degrees are 1,1,2,...,2 is a path.
inline bool is_path_shaped(const Graph& g) {
    int n = g.order();
    if (n == 1) return true;
    std::vector<int> degs = degree_multiset(g);
    for (int i = 0; i < n; ++i)
        if (degs[static_cast<std::size_t>(i)] != (i < 2 ? 1 : 2)) return false;
    VertexSet seen = VertexSet::single(n, 0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet reach(n);
        for (int v : frontier) reach |= g.neighbors(v);
        frontier = reach - seen;
        seen |= frontier;
    }
    return seen.size() == n;
}

}  // namespace primex::test

#endif
