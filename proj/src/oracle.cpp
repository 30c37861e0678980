#include "oracle.hpp"

#include <algorithm>
#include <thread>

#include "errors.hpp"
#include "graph_io.hpp"
#include "md_tree.hpp"
#include "modules.hpp"
#include "prime_bound.hpp"

namespace primex {

namespace {

Graph extension_candidate(const Graph& g, int p, std::uint64_t counter) {
    int n = g.order();
    GraphBuilder b(g, p);
    int bit = 0;
    for (int j = 0; j < p; ++j)
        for (int i = 0; i < n; ++i, ++bit)
            if ((counter >> bit) & 1) b.add_edge(n + j, i);
    for (int j2 = 1; j2 < p; ++j2)
        for (int j1 = 0; j1 < j2; ++j1, ++bit)
            if ((counter >> bit) & 1) b.add_edge(n + j1, n + j2);
    return b.build();
}

}  // namespace

OracleVerdict brute_force_prime_bound(const Graph& g, int p_cap, int guard_bits) {
    if (p_cap < 0) throw DomainError("brute_force_prime_bound: negative cap");
    int n = g.order();
    long worst_bits = static_cast<long>(n) * p_cap + static_cast<long>(p_cap) * (p_cap - 1) / 2;
    if (worst_bits > guard_bits)
        throw LimitError("brute_force_prime_bound: search needs 2^" + std::to_string(worst_bits) +
                         " candidates per level, guard allows 2^" + std::to_string(guard_bits));

    OracleVerdict verdict;
    for (int p = 0; p <= p_cap; ++p) {
        int bits = n * p + p * (p - 1) / 2;
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << bits); ++c) {
            ++verdict.search_space;
            Graph host = extension_candidate(g, p, c);
            if (is_prime(host)) {
                verdict.p_value = p;
                verdict.witness = certify_extension(std::move(host), g,
                                                    ConstructionTag::OracleSearch);
                return verdict;
            }
        }
    }
    verdict.exceeded_cap = true;
    return verdict;
}

std::pair<int, int> brute_force_modular_numbers(const Graph& g, int cap) {
    int n = g.order();
    if (n > cap)
        throw LimitError("brute_force_modular_numbers: order " + std::to_string(n) +
                         " exceeds the exhaustive cap " + std::to_string(cap));
    int alpha = 0, omega = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s = VertexSet::from_mask(n, mask);
        if (!is_module(g, s)) continue;
        bool clique = true, stable = true;
        for (int v : s)
            for (int u : s) {
                if (u >= v) break;
                if (g.adjacent(u, v))
                    stable = false;
                else
                    clique = false;
            }
        int size = s.size();
        if (stable) alpha = std::max(alpha, size);
        if (clique) omega = std::max(omega, size);
    }
    return {alpha, omega};
}

const char* to_string(SweepCheck check) {
    switch (check) {
        case SweepCheck::FormulaVsOracle: return "formula-vs-oracle";
        case SweepCheck::TreeVsBruteForce: return "tree-vs-bruteforce";
        case SweepCheck::ConstructionCertification: return "construction-certification";
        case SweepCheck::QExtensionContract: return "q-extension-contract";
        case SweepCheck::ComplementSymmetry: return "complement-symmetry";
    }
    return "?";
}

SweepCheck parse_sweep_check(const std::string& name) {
    for (SweepCheck c : {SweepCheck::FormulaVsOracle, SweepCheck::TreeVsBruteForce,
                         SweepCheck::ConstructionCertification, SweepCheck::QExtensionContract,
                         SweepCheck::ComplementSymmetry})
        if (name == to_string(c)) return c;
    throw DomainError("unknown sweep check \"" + name + "\"");
}

namespace {

std::string masks_to_string(std::vector<std::uint64_t> masks, int n) {
    std::sort(masks.begin(), masks.end());
    std::string out = "[";
    for (std::size_t i = 0; i < masks.size(); ++i) {
        if (i) out += " ";
        out += VertexSet::from_mask(n, masks[i]).to_string();
    }
    return out + "]";
}

// Strong modules of size >= 2 by definition chasing over the module list.
std::vector<std::uint64_t> brute_strong_masks(const Graph& g) {
    std::vector<VertexSet> mods = enumerate_modules(g);
    std::vector<std::uint64_t> out;
    for (const VertexSet& m : mods) {
        if (m.size() < 2) continue;
        bool strong = true;
        for (const VertexSet& other : mods) {
            if (!m.intersects(other)) continue;
            if (!m.is_subset_of(other) && !other.is_subset_of(m)) strong = false;
        }
        if (strong) out.push_back(m.to_mask());
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct CsModule {
    std::uint64_t mask;
    bool clique;
};

// Inclusion-maximal clique or stable modules of size >= 2.
std::vector<CsModule> brute_cs_maximal(const Graph& g) {
    std::vector<VertexSet> mods = enumerate_modules(g);
    std::vector<std::pair<VertexSet, bool>> family;
    for (const VertexSet& m : mods) {
        if (m.size() < 2) continue;
        bool clique = true, stable = true;
        for (int v : m)
            for (int u : m) {
                if (u >= v) break;
                if (g.adjacent(u, v))
                    stable = false;
                else
                    clique = false;
            }
        if (clique || stable) family.emplace_back(m, clique);
    }
    std::vector<CsModule> out;
    for (const auto& [m, clique] : family) {
        bool maximal = true;
        for (const auto& [other, oc] : family)
            if (m != other && m.is_subset_of(other)) maximal = false;
        if (maximal) out.push_back({m.to_mask(), clique});
    }
    std::sort(out.begin(), out.end(),
              [](const CsModule& a, const CsModule& b) { return a.mask < b.mask; });
    return out;
}

// Runs one check; empty optional means pass.
std::optional<SweepFailure> run_check(const Graph& g, SweepCheck check) {
    SweepFailure f;
    f.check = to_string(check);
    switch (check) {
        case SweepCheck::FormulaVsOracle: {
            OracleVerdict oracle = brute_force_prime_bound(g, 3);
            int formula = prime_bound(g).value;
            if (!oracle.exceeded_cap && oracle.p_value == formula) return std::nullopt;
            f.expected = oracle.exceeded_cap ? "exceeds cap" : std::to_string(oracle.p_value);
            f.actual = std::to_string(formula);
            return f;
        }
        case SweepCheck::TreeVsBruteForce: {
            MDTree tree = build_md_tree(g);
            std::vector<std::uint64_t> tree_masks;
            for (const MDNode& node : tree.nodes)
                if (node.label != NodeLabel::Leaf) tree_masks.push_back(node.vertices.to_mask());
            std::sort(tree_masks.begin(), tree_masks.end());
            std::vector<std::uint64_t> brute = brute_strong_masks(g);
            if (tree_masks != brute) {
                f.expected = "strong modules " + masks_to_string(brute, g.order());
                f.actual = masks_to_string(tree_masks, g.order());
                return f;
            }
            std::vector<CsModule> expect_cs = brute_cs_maximal(g);
            std::vector<CsModule> got_cs;
            for (const TaggedModule& t : maximal_cs_modules(g, tree))
                got_cs.push_back({t.vertices.to_mask(), t.kind == CsKind::Clique});
            std::sort(got_cs.begin(), got_cs.end(),
                      [](const CsModule& a, const CsModule& b) { return a.mask < b.mask; });
            bool same = expect_cs.size() == got_cs.size();
            for (std::size_t i = 0; same && i < expect_cs.size(); ++i)
                same = expect_cs[i].mask == got_cs[i].mask &&
                       expect_cs[i].clique == got_cs[i].clique;
            if (same) return std::nullopt;
            std::vector<std::uint64_t> em, gm;
            for (const CsModule& c : expect_cs) em.push_back(c.mask);
            for (const CsModule& c : got_cs) gm.push_back(c.mask);
            f.expected = "maximal cs-modules " + masks_to_string(em, g.order());
            f.actual = masks_to_string(gm, g.order());
            return f;
        }
        case SweepCheck::ConstructionCertification: {
            PrimeBoundResult pb = prime_bound(g);
            ExtensionCertificate cert = optimal_extension(g);
            if (cert.verified_prime && cert.added_count == pb.value) return std::nullopt;
            f.expected = "verified prime extension with " + std::to_string(pb.value) + " added";
            f.actual = std::string(cert.verified_prime ? "prime" : "non-prime") + " host with " +
                       std::to_string(cert.added_count) + " added";
            return f;
        }
        case SweepCheck::QExtensionContract: {
            StructureReport report = analyze_structure(g);
            int m = report.max_modular();
            if (m < 2) return std::nullopt;
            ExtensionCertificate cert = q_extension(g);
            int bound = ceil_log2(m + 1);
            if (cert.verified_prime && cert.stable_added_set && cert.added_count <= bound)
                return std::nullopt;
            f.expected = "prime host, stable added set, at most " + std::to_string(bound) +
                         " added";
            f.actual = std::string(cert.verified_prime ? "prime" : "non-prime") + ", " +
                       (cert.stable_added_set ? "stable" : "non-stable") + ", " +
                       std::to_string(cert.added_count) + " added";
            return f;
        }
        case SweepCheck::ComplementSymmetry: {
            Graph gc = g.complement();
            int pg = prime_bound(g).value, pgc = prime_bound(gc).value;
            bool qg = is_prime(g), qgc = is_prime(gc);
            if (pg == pgc && qg == qgc) return std::nullopt;
            f.expected = "p=" + std::to_string(pg) + " prime=" + std::to_string(qg);
            f.actual = "complement gave p=" + std::to_string(pgc) +
                       " prime=" + std::to_string(qgc);
            return f;
        }
    }
    return std::nullopt;
}

}  // namespace

SweepSummary labeled_graph_sweep(int order, SweepCheck check, int jobs) {
    if (order < 1) throw DomainError("labeled_graph_sweep: order must be at least 1");
    if (order > 6)
        throw LimitError("labeled_graph_sweep: full sweeps are limited to order <= 6, got " +
                         std::to_string(order));
    if (jobs < 1) throw DomainError("labeled_graph_sweep: jobs must be positive");

    std::uint64_t total = std::uint64_t{1} << (order * (order - 1) / 2);
    using Hit = std::pair<std::uint64_t, SweepFailure>;
    std::vector<std::vector<Hit>> partial(static_cast<std::size_t>(jobs));

    auto worker = [&](int w) {
        std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(jobs);
        std::uint64_t hi =
            total * (static_cast<std::uint64_t>(w) + 1) / static_cast<std::uint64_t>(jobs);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            Graph g = Graph::from_edge_mask(order, mask);
            std::optional<SweepFailure> fail;
            try {
                fail = run_check(g, check);
            } catch (const Error& e) {
                SweepFailure f;
                f.check = to_string(check);
                f.expected = "no error";
                f.actual = e.what();
                fail = f;
            }
            if (fail) {
                fail->graph6 = emit_graph6(g);
                partial[static_cast<std::size_t>(w)].emplace_back(mask, std::move(*fail));
            }
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }

    SweepSummary summary;
    summary.order = order;
    summary.check = check;
    summary.graph_count = total;
    std::vector<Hit> all;
    for (auto& part : partial)
        for (auto& hit : part) all.push_back(std::move(hit));
    std::sort(all.begin(), all.end(),
              [](const Hit& a, const Hit& b) { return a.first < b.first; });
    for (auto& hit : all) summary.failures.push_back(std::move(hit.second));
    return summary;
}

}  // namespace primex
