#include "md_tree.hpp"

#include <algorithm>
#include <cassert>

#include <json.hpp>

#include "errors.hpp"
#include "modules.hpp"

namespace primex {

const char* to_string(NodeLabel label) {
    switch (label) {
        case NodeLabel::Leaf: return "leaf";
        case NodeLabel::Empty: return "empty";
        case NodeLabel::Complete: return "complete";
        case NodeLabel::Prime: return "prime";
    }
    return "?";
}

const char* to_string(CsKind kind) {
    return kind == CsKind::Clique ? "clique" : "stable";
}

namespace {

// Connected components of G[domain]; complement adjacency when `co` is set.
// Components come out ordered by their least vertex.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& domain, bool co) {
    int n = g.order();
    std::vector<VertexSet> comps;
    VertexSet todo = domain;
    while (!todo.empty()) {
        VertexSet comp(n);
        VertexSet frontier = VertexSet::single(n, todo.first());
        while (!frontier.empty()) {
            comp |= frontier;
            todo -= frontier;
            VertexSet reach(n);
            for (int v : frontier) {
                if (co) {
                    VertexSet non = g.neighbors(v).complement();
                    non.erase(v);
                    reach |= non & todo;
                } else {
                    reach |= g.neighbors(v) & todo;
                }
            }
            frontier = reach;
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Maximal proper strong modules of G[domain] when G[domain] is connected and
// co-connected. Each vertex u lies in exactly one such block, recovered as
// the union of the proper pair closures through u.
std::vector<VertexSet> prime_children(const Graph& g, const VertexSet& domain) {
    int n = g.order();
    std::vector<VertexSet> blocks;
    VertexSet unassigned = domain;
    while (!unassigned.empty()) {
        int u = unassigned.first();
        VertexSet block = VertexSet::single(n, u);
        for (int v : domain) {
            if (v == u || block.contains(v)) continue;
            VertexSet closure = smallest_module_within(g, domain, VertexSet::of(n, {u, v}));
            if (closure != domain) block |= closure;
        }
        unassigned -= block;
        blocks.push_back(std::move(block));
    }
    return blocks;
}

int build_node(const Graph& g, const VertexSet& domain, MDTree& tree) {
    MDNode node;
    node.vertices = domain;
    if (domain.size() == 1) {
        node.label = NodeLabel::Leaf;
        tree.nodes.push_back(std::move(node));
        return static_cast<int>(tree.nodes.size()) - 1;
    }

    std::vector<VertexSet> parts = components_within(g, domain, /*co=*/false);
    if (parts.size() >= 2) {
        node.label = NodeLabel::Empty;
    } else {
        parts = components_within(g, domain, /*co=*/true);
        if (parts.size() >= 2) {
            node.label = NodeLabel::Complete;
        } else {
            node.label = NodeLabel::Prime;
            parts = prime_children(g, domain);
            assert(parts.size() >= 4);
        }
    }

    for (const VertexSet& part : parts) node.children.push_back(build_node(g, part, tree));
    tree.nodes.push_back(std::move(node));
    return static_cast<int>(tree.nodes.size()) - 1;
}

}  // namespace

int MDTree::find_node(const VertexSet& vs) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].vertices == vs) return static_cast<int>(i);
    return -1;
}

MDTree build_md_tree(const Graph& g) {
    if (g.order() < 1) throw DomainError("build_md_tree: order must be at least 1");
    MDTree tree;
    tree.root = build_node(g, VertexSet::full(g.order()), tree);
    return tree;
}

VertexSet hat(const MDTree& tree, const VertexSet& w) {
    if (w.empty()) throw DomainError("hat: set must be nonempty");
    int cur = tree.root;
    if (!w.is_subset_of(tree.at(cur).vertices))
        throw DomainError("hat: set not inside the tree's vertex set");
    for (;;) {
        int descend = -1;
        for (int c : tree.at(cur).children)
            if (w.is_subset_of(tree.at(c).vertices)) {
                descend = c;
                break;
            }
        if (descend < 0) return tree.at(cur).vertices;
        cur = descend;
    }
}

std::vector<TaggedModule> maximal_cs_modules(const Graph& g, const MDTree& tree) {
    std::vector<TaggedModule> out;
    for (const MDNode& node : tree.nodes) {
        if (node.label != NodeLabel::Empty && node.label != NodeLabel::Complete) continue;
        VertexSet singles(g.order());
        int count = 0;
        for (int c : node.children)
            if (tree.at(c).label == NodeLabel::Leaf) {
                singles |= tree.at(c).vertices;
                ++count;
            }
        if (count >= 2)
            out.push_back({singles, node.label == NodeLabel::Empty ? CsKind::Stable
                                                                   : CsKind::Clique});
    }
    std::sort(out.begin(), out.end(), [](const TaggedModule& a, const TaggedModule& b) {
        return a.vertices.first() < b.vertices.first();
    });
    return out;
}

StructureReport modular_numbers(const Graph& g, const MDTree& tree) {
    int n = g.order();
    StructureReport report;
    report.order = n;
    report.residue = VertexSet::full(n);
    report.max_cs_modules = maximal_cs_modules(g, tree);

    report.alpha_m = report.omega_m = n >= 1 ? 1 : 0;
    for (const TaggedModule& m : report.max_cs_modules) {
        int size = m.vertices.size();
        if (m.kind == CsKind::Stable)
            report.alpha_m = std::max(report.alpha_m, size);
        else
            report.omega_m = std::max(report.omega_m, size);
        report.residue -= m.vertices;
    }

    for (const MDNode& node : tree.nodes) {
        if (node.label != NodeLabel::Prime) continue;
        bool all_leaves = true;
        for (int c : node.children)
            if (tree.at(c).label != NodeLabel::Leaf) all_leaves = false;
        if (all_leaves) report.prime_modules.push_back(node.vertices);
    }
    std::sort(report.prime_modules.begin(), report.prime_modules.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    for (const VertexSet& p : report.prime_modules) report.residue -= p;

    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 0) ++report.iota;
        if (d == n - 1) ++report.iota_complement;
    }
    return report;
}

StructureReport analyze_structure(const Graph& g) {
    if (g.order() == 0) {
        StructureReport report;
        report.residue = VertexSet(0);
        return report;
    }
    MDTree tree = build_md_tree(g);
    return modular_numbers(g, tree);
}

namespace {

nlohmann::json node_to_json(const MDTree& tree, int i) {
    const MDNode& node = tree.at(i);
    nlohmann::json j;
    j["label"] = to_string(node.label);
    j["vertices"] = node.vertices.to_vector();
    j["children"] = nlohmann::json::array();
    for (int c : node.children) j["children"].push_back(node_to_json(tree, c));
    return j;
}

}  // namespace

std::string mdtree_to_json(const MDTree& tree) {
    return node_to_json(tree, tree.root).dump();
}

std::string mdtree_to_dot(const MDTree& tree) {
    std::string out = "graph mdtree {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        const MDNode& node = tree.nodes[i];
        std::string label = node.label == NodeLabel::Leaf
                                ? std::to_string(node.vertices.first())
                                : std::string(to_string(node.label)) + " " +
                                      node.vertices.to_string();
        out += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    for (std::size_t i = 0; i < tree.nodes.size(); ++i)
        for (int c : tree.nodes[i].children)
            out += "  n" + std::to_string(i) + " -- n" + std::to_string(c) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace primex
