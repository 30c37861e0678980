#include "modules.hpp"

#include <string>

#include "errors.hpp"

namespace primex {

namespace {

void check_universe(const Graph& g, const VertexSet& s, const char* what) {
    if (s.universe() != g.order())
        throw DomainError(std::string(what) + ": vertex set universe does not match graph order");
}

// -1 if no splitter; otherwise the lowest-index vertex of domain \ m that
// sees part of m but not all of it.
int lowest_splitter(const Graph& g, const VertexSet& domain, const VertexSet& m) {
    for (int v : domain) {
        if (m.contains(v)) continue;
        if (!g.neighbors(v).all_or_none_of(m)) return v;
    }
    return -1;
}

}  // namespace

bool is_module_within(const Graph& g, const VertexSet& domain, const VertexSet& m) {
    check_universe(g, domain, "is_module");
    check_universe(g, m, "is_module");
    if (!m.is_subset_of(domain)) throw DomainError("is_module: set not inside domain");
    return lowest_splitter(g, domain, m) < 0;
}

bool is_module(const Graph& g, const VertexSet& m) {
    return is_module_within(g, VertexSet::full(g.order()), m);
}

VertexSet smallest_module_within(const Graph& g, const VertexSet& domain, const VertexSet& seed) {
    check_universe(g, domain, "smallest_module_containing");
    check_universe(g, seed, "smallest_module_containing");
    if (seed.empty()) throw DomainError("smallest_module_containing: seed must be nonempty");
    if (!seed.is_subset_of(domain))
        throw DomainError("smallest_module_containing: seed not inside domain");
    VertexSet m = seed;
    for (int v = lowest_splitter(g, domain, m); v >= 0; v = lowest_splitter(g, domain, m))
        m.insert(v);
    return m;
}

VertexSet smallest_module_containing(const Graph& g, const VertexSet& seed) {
    return smallest_module_within(g, VertexSet::full(g.order()), seed);
}

bool is_prime(const Graph& g) {
    int n = g.order();
    if (n < 4) return false;
    VertexSet all = VertexSet::full(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            VertexSet m = smallest_module_within(g, all, VertexSet::of(n, {u, v}));
            if (m != all) return false;
        }
    return true;
}

std::vector<VertexSet> enumerate_modules(const Graph& g, int cap) {
    int n = g.order();
    if (n > cap)
        throw LimitError("enumerate_modules: order " + std::to_string(n) +
                         " exceeds the exhaustive cap " + std::to_string(cap));
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s = VertexSet::from_mask(n, mask);
        if (is_module(g, s)) out.push_back(std::move(s));
    }
    return out;
}

Quotient quotient(const Graph& g, const std::vector<VertexSet>& blocks) {
    int n = g.order();
    VertexSet covered(n);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const VertexSet& b = blocks[i];
        check_universe(g, b, "quotient");
        if (b.empty())
            throw DomainError("quotient: block " + std::to_string(i) + " is empty");
        if (covered.intersects(b))
            throw DomainError("quotient: block " + std::to_string(i) +
                              " overlaps an earlier block");
        if (!is_module(g, b))
            throw DomainError("quotient: block " + std::to_string(i) + " " + b.to_string() +
                              " is not a module");
        covered |= b;
    }
    if (covered != VertexSet::full(n))
        throw DomainError("quotient: blocks do not cover the vertex set");

    GraphBuilder qb(static_cast<int>(blocks.size()));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        int ri = blocks[i].first();
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            // between disjoint modules the adjacency value is constant
            if (g.adjacent(ri, blocks[j].first()))
                qb.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return Quotient{qb.build(), blocks};
}

}  // namespace primex
