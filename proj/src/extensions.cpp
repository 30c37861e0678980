#include "extensions.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <string>

#include "errors.hpp"
#include "md_tree.hpp"
#include "modules.hpp"
#include "prime_bound.hpp"

namespace primex {

const char* to_string(ConstructionTag tag) {
    switch (tag) {
        case ConstructionTag::Identity: return "identity";
        case ConstructionTag::PathEmbed: return "path-embed";
        case ConstructionTag::StableStable: return "stable-stable";
        case ConstructionTag::CliqueStable: return "clique-stable";
        case ConstructionTag::ApexPair: return "apex-pair";
        case ConstructionTag::RecursiveStable: return "recursive-stable";
        case ConstructionTag::RecursiveStableMerge: return "recursive-stable-merge";
        case ConstructionTag::ApexPairSplitter: return "apex-pair-splitter";
        case ConstructionTag::ApexPrimeParts: return "apex-prime-parts";
        case ConstructionTag::PeelReattach: return "peel-reattach";
        case ConstructionTag::OracleSearch: return "oracle-search";
    }
    return "?";
}

VertexSet ExtensionCertificate::added_set() const {
    VertexSet s(host.order());
    for (int v = base_order; v < host.order(); ++v) s.insert(v);
    return s;
}

bool verify_certificate_prime(const ExtensionCertificate& cert, VerifyPolicy policy) {
    int order = cert.host.order();
    if (order > policy.closure_cap) return false;
    bool prime = is_prime(cert.host);
    if (order <= policy.exhaustive_cap) {
        bool exhaustive_prime = order >= 4;
        for (const VertexSet& m : enumerate_modules(cert.host))
            if (m.size() >= 2 && m.size() < order) exhaustive_prime = false;
        if (exhaustive_prime != prime)
            throw VerifyError("primality checks disagree on a host of order " +
                              std::to_string(order));
    }
    return prime;
}

namespace {

bool added_set_is_stable(const Graph& host, int base_order) {
    for (int v = base_order; v < host.order(); ++v)
        for (int u = v + 1; u < host.order(); ++u)
            if (host.adjacent(u, v)) return false;
    return true;
}

// Copies every edge of src into the builder under the vertex map.
void embed(GraphBuilder& b, const Graph& src, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != src.order())
        throw VerifyError("embedding map does not cover the source graph");
    for (int v = 0; v < src.order(); ++v)
        for (int u : src.neighbors(v))
            if (u < v) b.add_edge(map[static_cast<std::size_t>(u)],
                                  map[static_cast<std::size_t>(v)]);
}

// Subsets of [0, n) in size-then-lex order; stops when fn returns false.
void for_each_subset_size_lex(int n, const std::function<bool(const VertexSet&)>& fn) {
    if (!fn(VertexSet(n))) return;
    std::vector<int> c;
    for (int k = 1; k <= n; ++k) {
        c.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
        for (;;) {
            VertexSet s(n);
            for (int v : c) s.insert(v);
            if (!fn(s)) return;
            // next k-combination in lex order
            int i = k - 1;
            while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

std::vector<VertexSet> forbidden_neighborhoods(const Graph& g) {
    int n = g.order();
    std::vector<VertexSet> forbidden;
    forbidden.push_back(VertexSet(n));
    forbidden.push_back(VertexSet::full(n));
    for (int v = 0; v < n; ++v) {
        forbidden.push_back(g.neighbors(v));
        VertexSet closed = g.neighbors(v);
        closed.insert(v);
        forbidden.push_back(std::move(closed));
    }
    return forbidden;
}

// The `count` smallest admissible apex neighborhoods of a prime graph in
// size-then-lex order; cheap because small admissible sets always exist.
std::vector<VertexSet> first_admissible_neighborhoods(const Graph& g, int count) {
    std::vector<VertexSet> forbidden = forbidden_neighborhoods(g);
    std::vector<VertexSet> out;
    for_each_subset_size_lex(g.order(), [&](const VertexSet& s) {
        if (std::find(forbidden.begin(), forbidden.end(), s) == forbidden.end()) {
            out.push_back(s);
            if (static_cast<int>(out.size()) >= count) return false;
        }
        return true;
    });
    if (static_cast<int>(out.size()) < count)
        throw VerifyError("prime graph offered fewer admissible neighborhoods than requested");
    return out;
}

std::vector<int> ascending_map(const VertexSet& targets) { return targets.to_vector(); }

struct BasicExtension {
    Graph host;         // extension of the input with the added set appended
    int added_count = 0;
    int hub = -1;       // added vertex fully adjacent to the deepest block, if any
    int splitter = -1;  // added vertex with mixed adjacency into that block
};

// Stable-set extension of g over a partition into strong modules with at
// least one block of size >= 2: the block of largest recursive demand is
// extended first, the other large blocks reuse a slice of the same added
// set, and singleton blocks attach to the splitter vertex alone.
BasicExtension basic_construction(const Graph& g, const std::vector<VertexSet>& blocks) {
    int n = g.order();

    struct Child {
        VertexSet block;
        ExtensionCertificate cert;
    };
    std::vector<Child> big;
    std::vector<int> singles;
    for (const VertexSet& b : blocks) {
        if (b.size() >= 2)
            big.push_back({b, q_extension(g.induced(b))});
        else
            singles.push_back(b.first());
    }
    if (big.empty()) throw DomainError("basic construction requires a block of size >= 2");

    std::size_t xi = 0;
    for (std::size_t i = 1; i < big.size(); ++i)
        if (big[i].cert.added_count > big[xi].cert.added_count) xi = i;
    int s = big[xi].cert.added_count;

    GraphBuilder b(g, s);

    // deepest block first: its added set is the whole slice [n, n+s)
    {
        std::vector<int> map = ascending_map(big[xi].block);
        for (int j = 0; j < s; ++j) map.push_back(n + j);
        embed(b, big[xi].cert.host, map);
    }

    // classify the added vertices against the deepest block
    int hub = -1, splitter = -1;
    int block_size = big[xi].block.size();
    for (int t = n; t < n + s; ++t) {
        int seen = 0;
        for (int v : big[xi].block)
            if (b.adjacent(t, v)) ++seen;
        if (seen == block_size) {
            if (hub >= 0) throw VerifyError("two added vertices fully adjacent to a block");
            hub = t;
        } else if (seen == 0) {
            throw VerifyError("added vertex disconnected from the extended block");
        } else if (splitter < 0) {
            splitter = t;
        }
    }
    if (splitter < 0) throw VerifyError("no splitter vertex over the extended block");

    // remaining large blocks reuse a slice containing the hub
    for (std::size_t i = 0; i < big.size(); ++i) {
        if (i == xi) continue;
        int want = big[i].cert.added_count;
        VertexSet slice(n + s);
        if (hub >= 0) slice.insert(hub);
        for (int t = n; t < n + s && slice.size() < want; ++t) slice.insert(t);
        std::vector<int> map = ascending_map(big[i].block);
        for (int t : slice) map.push_back(t);
        embed(b, big[i].cert.host, map);
    }

    for (int v : singles) b.add_edge(v, splitter);

    BasicExtension out;
    out.host = b.build();
    out.added_count = s;
    out.hub = hub;
    out.splitter = splitter;
    return out;
}

}  // namespace

ExtensionCertificate certify_extension(Graph host, const Graph& base, ConstructionTag tag) {
    ExtensionCertificate cert;
    cert.base_order = base.order();
    cert.added_count = host.order() - base.order();
    cert.tag = tag;
    cert.stable_added_set = added_set_is_stable(host, base.order());
    cert.host = std::move(host);

    VertexSet base_set(cert.host.order());
    for (int v = 0; v < cert.base_order; ++v) base_set.insert(v);
    if (cert.host.induced(base_set) != base)
        throw VerifyError("construction violated the extension property");

    cert.verified_prime = verify_certificate_prime(cert);
    return cert;
}

Graph stable_stable_prime(int s_size) {
    if (s_size < 2) throw DomainError("stable_stable_prime requires a part of size >= 2");
    int aux = ceil_log2(s_size + 1);
    GraphBuilder b(s_size + aux);
    if (s_size == 2) {
        // the general assignment degenerates here; a 4-path works
        b.add_edge(0, 2);
        b.add_edge(2, 1);
        b.add_edge(1, 3);
        return b.build();
    }
    // base vertex i < aux is matched with auxiliary vertex s_size + i and
    // receives every auxiliary vertex except its partner
    std::vector<std::uint64_t> used;
    for (int i = 0; i < aux; ++i) {
        std::uint64_t image = 0;
        for (int j = 0; j < aux; ++j)
            if (j != i) image |= std::uint64_t{1} << j;
        used.push_back(image);
        for (int j = 0; j < aux; ++j)
            if (j != i) b.add_edge(i, s_size + j);
    }
    // the rest take the smallest unused nonempty subsets, by size then lex
    for_each_subset_size_lex(aux, [&](const VertexSet& s) {
        if (s.empty()) return true;
        std::uint64_t image = s.to_mask();
        if (std::find(used.begin(), used.end(), image) != used.end()) return true;
        if (static_cast<int>(used.size()) >= s_size) return false;
        used.push_back(image);
        int i = static_cast<int>(used.size()) - 1;
        for (int j = 0; j < aux; ++j)
            if ((image >> j) & 1) b.add_edge(i, s_size + j);
        return true;
    });
    if (static_cast<int>(used.size()) != s_size)
        throw VerifyError("ran out of auxiliary subsets for the stable part");
    return b.build();
}

Graph clique_stable_prime(int c_size) {
    if (c_size < 2) throw DomainError("clique_stable_prime requires a part of size >= 2");
    int aux = ceil_log2(c_size + 1);
    GraphBuilder b(c_size + aux);
    for (int u = 0; u < c_size; ++u)
        for (int v = u + 1; v < c_size; ++v) b.add_edge(u, v);
    // clique vertex i < aux is adjacent to exactly its partner auxiliary
    // vertex; the rest take the smallest unused proper subsets, empty allowed
    std::vector<std::uint64_t> used;
    for (int i = 0; i < aux; ++i) {
        used.push_back(std::uint64_t{1} << i);
        b.add_edge(i, c_size + i);
    }
    std::uint64_t full = (std::uint64_t{1} << aux) - 1;
    for_each_subset_size_lex(aux, [&](const VertexSet& s) {
        std::uint64_t image = s.to_mask();
        if (image == full) return true;
        if (std::find(used.begin(), used.end(), image) != used.end()) return true;
        if (static_cast<int>(used.size()) >= c_size) return false;
        used.push_back(image);
        int i = static_cast<int>(used.size()) - 1;
        for (int j = 0; j < aux; ++j)
            if ((image >> j) & 1) b.add_edge(i, c_size + j);
        return true;
    });
    if (static_cast<int>(used.size()) != c_size)
        throw VerifyError("ran out of auxiliary subsets for the clique part");
    return b.build();
}

std::vector<VertexSet> prime_one_extensions(const Graph& g) {
    if (!is_prime(g)) throw DomainError("prime_one_extensions requires a prime graph");
    int n = g.order();
    if (n > kExhaustiveCap)
        throw LimitError("prime_one_extensions: order " + std::to_string(n) +
                         " exceeds the enumeration cap " + std::to_string(kExhaustiveCap));
    std::vector<VertexSet> forbidden = forbidden_neighborhoods(g);
    std::vector<VertexSet> out;
    for_each_subset_size_lex(n, [&](const VertexSet& s) {
        if (std::find(forbidden.begin(), forbidden.end(), s) == forbidden.end())
            out.push_back(s);
        return true;
    });
    return out;
}

ExtensionCertificate prime_two_extension_nonadjacent(const Graph& g) {
    if (!is_prime(g)) throw DomainError("prime_two_extension_nonadjacent requires a prime graph");
    int n = g.order();
    std::vector<VertexSet> picks = first_admissible_neighborhoods(g, 2);
    GraphBuilder b(g, 2);
    for (int v : picks[0]) b.add_edge(n, v);
    for (int v : picks[1]) b.add_edge(n + 1, v);
    return certify_extension(b.build(), g, ConstructionTag::ApexPair);
}

ExtensionCertificate q_extension(const Graph& g) {
    int n = g.order();
    if (n < 2) throw DomainError("q_extension requires order >= 2");
    if (is_prime(g)) return prime_two_extension_nonadjacent(g);

    MDTree tree = build_md_tree(g);
    const MDNode& root = tree.at(tree.root);
    std::vector<VertexSet> blocks;
    for (int c : root.children) blocks.push_back(tree.at(c).vertices);

    if (root.label == NodeLabel::Prime) {
        BasicExtension be = basic_construction(g, blocks);
        return certify_extension(std::move(be.host), g, ConstructionTag::RecursiveStable);
    }

    bool complete_root = root.label == NodeLabel::Complete;
    std::vector<VertexSet> big;
    VertexSet w1(n), w2(n);
    for (const VertexSet& blk : blocks) {
        if (blk.size() >= 2) {
            big.push_back(blk);
            w2 |= blk;
        } else {
            w1 |= blk;
        }
    }

    if (big.empty()) {
        // the graph itself is empty or complete
        Graph host = complete_root ? clique_stable_prime(n) : stable_stable_prime(n);
        return certify_extension(std::move(host), g,
                                  complete_root ? ConstructionTag::CliqueStable
                                                : ConstructionTag::StableStable);
    }
    if (w1.size() <= 1) {
        BasicExtension be = basic_construction(g, blocks);
        return certify_extension(std::move(be.host), g, ConstructionTag::RecursiveStable);
    }

    // degenerate root with >= 2 singleton children: combine the recursive
    // extension of the large blocks with a two-stable-parts (or
    // clique-stable) extension of the singleton union
    std::vector<int> w2_list = w2.to_vector();
    std::vector<int> old_to_new;
    Graph sub = g.induced(w2, &old_to_new);
    std::vector<VertexSet> sub_blocks;
    for (const VertexSet& blk : big) {
        VertexSet mapped(sub.order());
        for (int v : blk) mapped.insert(old_to_new[static_cast<std::size_t>(v)]);
        sub_blocks.push_back(std::move(mapped));
    }
    BasicExtension be = basic_construction(sub, sub_blocks);
    int s = be.added_count;

    int w1_size = w1.size();
    Graph part = complete_root ? clique_stable_prime(w1_size) : stable_stable_prime(w1_size);
    int s1 = part.order() - w1_size;

    int q = std::max(s, s1);
    GraphBuilder b(g, q);

    // the recursive part always lands on the first s added slots
    {
        std::vector<int> map = w2_list;
        for (int j = 0; j < s; ++j) map.push_back(n + j);
        embed(b, be.host, map);
    }
    int hub = be.hub >= 0 ? n + (be.hub - sub.order()) : -1;

    if (s1 <= s) {
        // choose the part's slice inside the shared slots, hub included
        VertexSet slice(n + q);
        if (hub >= 0) slice.insert(hub);
        for (int t = n; t < n + s && slice.size() < s1; ++t) slice.insert(t);
        std::vector<int> map = w1.to_vector();
        for (int t : slice) map.push_back(t);
        embed(b, part, map);
        for (int v : w1)
            for (int t = n; t < n + s; ++t)
                if (!slice.contains(t)) b.set_edge(v, t, complete_root);
    } else {
        std::vector<int> map = w1.to_vector();
        for (int j = 0; j < s1; ++j) map.push_back(n + j);
        embed(b, part, map);
        for (int v : w2)
            for (int t = n + s; t < n + s1; ++t) b.set_edge(v, t, complete_root);
    }
    return certify_extension(b.build(), g, ConstructionTag::RecursiveStableMerge);
}

ExtensionCertificate one_extension_special(const Graph& g, ApexMode mode) {
    int n = g.order();
    StructureReport report = analyze_structure(g);
    VertexSet reference(n);

    if (mode == ApexMode::PairSplitter) {
        if (report.max_modular() != 2)
            throw DomainError("pair-splitter extension requires max(alpha_m, omega_m) = 2");
        if (report.iota == 2 || report.iota_complement == 2)
            throw DomainError("pair-splitter extension requires isolated counts other than 2");
        reference = report.max_cs_modules.front().vertices;
    } else {
        if (n < 4 || is_prime(g) || report.max_modular() != 1)
            throw DomainError(
                "prime-parts extension requires a non-prime graph of order >= 4 with "
                "alpha_m = omega_m = 1");
        if (!report.max_cs_modules.empty())
            throw VerifyError("unexpected clique/stable module with max modular number 1");
        // the minimal strong modules all induce prime subgraphs here
        if (report.prime_modules.empty())
            throw VerifyError("no prime module found in a non-prime graph with max 1");
        reference = report.prime_modules.front();
    }

    GraphBuilder b(g, 1);
    int apex = n;

    for (const VertexSet& m : report.prime_modules) {
        Graph sub = g.induced(m);
        VertexSet local = first_admissible_neighborhoods(sub, 1)[0];
        std::vector<int> back = m.to_vector();
        for (int v : local) b.add_edge(apex, back[static_cast<std::size_t>(v)]);
    }
    if (mode == ApexMode::PairSplitter) {
        for (const TaggedModule& m : report.max_cs_modules) {
            if (m.vertices.size() != 2)
                throw VerifyError("clique/stable module of unexpected size under max 2");
            b.add_edge(apex, m.vertices.first());
        }
    }
    for (int v : report.residue) {
        bool i = g.adjacent(v, reference.first());
        if (!i) b.add_edge(apex, v);
    }
    return certify_extension(b.build(), g,
                              mode == ApexMode::PairSplitter ? ConstructionTag::ApexPairSplitter
                                                             : ConstructionTag::ApexPrimeParts);
}

ExtensionCertificate power_of_two_extension(const Graph& g) {
    int n = g.order();
    StructureReport report = analyze_structure(g);
    int m = report.max_modular();
    if (!is_power_of_two(m) || m < 4)
        throw DomainError("peel-reattach extension requires max(alpha_m, omega_m) = 2^k, k >= 2");
    int k = std::bit_width(static_cast<unsigned>(m)) - 1;
    if (report.iota == m || report.iota_complement == m)
        throw DomainError("peel-reattach extension requires isolated counts other than 2^k");

    std::vector<VertexSet> peeled_from;
    VertexSet kept = VertexSet::full(n);
    for (const TaggedModule& t : report.max_cs_modules)
        if (t.vertices.size() == m) {
            peeled_from.push_back(t.vertices);
            kept.erase(t.vertices.first());
        }

    std::vector<int> old_to_new;
    Graph sub = g.induced(kept, &old_to_new);

    StructureReport sub_report = analyze_structure(sub);
    if (sub_report.max_modular() != m - 1)
        throw VerifyError("peeling did not reduce the max modular number to 2^k - 1");

    ExtensionCertificate inner = optimal_extension(sub);
    if (inner.added_count != k)
        throw VerifyError("inner extension used " + std::to_string(inner.added_count) +
                          " vertices, expected " + std::to_string(k));

    GraphBuilder b(g, k);
    {
        std::vector<int> map;
        for (int v : kept) map.push_back(v);
        for (int j = 0; j < k; ++j) map.push_back(n + j);
        embed(b, inner.host, map);
    }

    // each peeled vertex gets the one added-set trace its block left unused
    for (const VertexSet& block : peeled_from) {
        int w = block.first();
        std::vector<bool> seen(std::size_t{1} << k, false);
        for (int v : block) {
            if (v == w) continue;
            int sv = old_to_new[static_cast<std::size_t>(v)];
            std::uint64_t trace = 0;
            for (int j = 0; j < k; ++j)
                if (inner.host.adjacent(sv, sub.order() + j)) trace |= std::uint64_t{1} << j;
            if (seen[trace]) throw VerifyError("duplicate added-set trace inside a block");
            seen[trace] = true;
        }
        std::uint64_t missing = 0;
        for (std::uint64_t t = 0; t < (std::uint64_t{1} << k); ++t)
            if (!seen[t]) {
                missing = t;
                break;
            }
        for (int j = 0; j < k; ++j)
            if ((missing >> j) & 1) b.add_edge(w, n + j);
    }
    return certify_extension(b.build(), g, ConstructionTag::PeelReattach);
}

ExtensionCertificate optimal_extension(const Graph& g) {
    PrimeBoundResult pb = prime_bound(g);
    ExtensionCertificate cert;
    switch (pb.case_tag) {
        case BoundCase::AlreadyPrime:
            cert = certify_extension(g, g, ConstructionTag::Identity);
            break;
        case BoundCase::TinyGraph: {
            GraphBuilder b(g, 4 - g.order());
            b.add_edge(0, 1);
            b.add_edge(1, 2);
            b.add_edge(2, 3);
            cert = certify_extension(b.build(), g, ConstructionTag::PathEmbed);
            break;
        }
        case BoundCase::NotPowerOfTwo:
        case BoundCase::PowerOfTwoIsolated:
            cert = q_extension(g);
            break;
        case BoundCase::PowerOfTwoRegular:
            cert = pb.k == 1 ? one_extension_special(g, ApexMode::PairSplitter)
                             : power_of_two_extension(g);
            break;
        case BoundCase::AlphaOmegaOne:
            cert = one_extension_special(g, ApexMode::PrimeParts);
            break;
    }
    if (cert.added_count != pb.value)
        throw VerifyError("construction used " + std::to_string(cert.added_count) +
                          " added vertices but the bound is " + std::to_string(pb.value));
    return cert;
}

}  // namespace primex
