#include "report.hpp"

#include <sstream>

#include <json.hpp>

#include "errors.hpp"
#include "graph_io.hpp"
#include "md_tree.hpp"
#include "modules.hpp"
#include "prime_bound.hpp"

namespace primex {

namespace {

using nlohmann::json;

json certificate_to_json_value(const ExtensionCertificate& cert) {
    json j;
    j["host"] = emit_graph6(cert.host);
    j["base_order"] = cert.base_order;
    j["added_count"] = cert.added_count;
    j["construction"] = to_string(cert.tag);
    j["verified_prime"] = cert.verified_prime;
    j["stable_added_set"] = cert.stable_added_set;
    return j;
}

json analyze_to_json_value(const Graph& g) {
    StructureReport report = analyze_structure(g);
    PrimeBoundResult pb = prime_bound(g, report);

    json j;
    j["order"] = g.order();
    j["edges"] = g.edge_count();
    j["prime"] = pb.case_tag == BoundCase::AlreadyPrime;
    j["alpha_m"] = report.alpha_m;
    j["omega_m"] = report.omega_m;
    j["iota"] = report.iota;
    j["iota_complement"] = report.iota_complement;

    j["max_cs_modules"] = json::array();
    for (const TaggedModule& m : report.max_cs_modules)
        j["max_cs_modules"].push_back({{"vertices", m.vertices.to_vector()},
                                       {"kind", to_string(m.kind)}});
    j["prime_modules"] = json::array();
    for (const VertexSet& m : report.prime_modules) j["prime_modules"].push_back(m.to_vector());
    j["residue"] = report.residue.to_vector();

    j["prime_bound"] = {{"value", pb.value},
                        {"case", to_string(pb.case_tag)},
                        {"m", pb.m},
                        {"k", pb.k >= 0 ? json(pb.k) : json(nullptr)}};
    j["lower_bound_modular"] =
        report.max_modular() >= 2 ? json(lower_bound_modular(report)) : json(nullptr);
    j["lower_bound_isolated"] = std::max(report.iota, report.iota_complement) >= 1
                                    ? json(lower_bound_isolated(report))
                                    : json(nullptr);
    j["upper_bound_modular"] =
        report.max_modular() >= 2 ? json(upper_bound_modular(report)) : json(nullptr);
    return j;
}

std::string sets_line(const std::vector<VertexSet>& sets) {
    if (sets.empty()) return "(none)";
    std::string out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i) out += " ";
        out += sets[i].to_string();
    }
    return out;
}

}  // namespace

std::string analyze_json(const Graph& g) { return analyze_to_json_value(g).dump(); }

std::string analyze_human(const Graph& g) {
    StructureReport report = analyze_structure(g);
    PrimeBoundResult pb = prime_bound(g, report);
    std::ostringstream out;
    out << "order: " << g.order() << "\n";
    out << "edges: " << g.edge_count() << "\n";
    out << "prime: " << (pb.case_tag == BoundCase::AlreadyPrime ? "yes" : "no") << "\n";
    out << "alpha_m: " << report.alpha_m << "\n";
    out << "omega_m: " << report.omega_m << "\n";
    out << "iota: " << report.iota << "\n";
    out << "iota_complement: " << report.iota_complement << "\n";
    out << "max_cs_modules:";
    if (report.max_cs_modules.empty()) out << " (none)";
    for (const TaggedModule& m : report.max_cs_modules)
        out << " " << m.vertices.to_string() << ":" << to_string(m.kind);
    out << "\n";
    std::vector<VertexSet> primes = report.prime_modules;
    out << "prime_modules: " << sets_line(primes) << "\n";
    out << "residue: " << (report.residue.empty() ? "(none)" : report.residue.to_string())
        << "\n";
    out << "prime_bound: " << pb.value << " (" << to_string(pb.case_tag) << "; m=" << pb.m;
    if (pb.k >= 0) out << ", k=" << pb.k;
    out << ")";
    if (pb.case_tag == BoundCase::TinyGraph) out << " [order <= 1 is outside the theory]";
    out << "\n";
    if (report.max_modular() >= 2) {
        out << "lower_bound_modular: " << lower_bound_modular(report) << "\n";
        out << "upper_bound_modular: " << upper_bound_modular(report) << "\n";
    }
    if (std::max(report.iota, report.iota_complement) >= 1)
        out << "lower_bound_isolated: " << lower_bound_isolated(report) << "\n";
    return out.str();
}

std::string certificate_json(const ExtensionCertificate& cert) {
    return certificate_to_json_value(cert).dump();
}

std::string certificate_human(const ExtensionCertificate& cert) {
    std::ostringstream out;
    out << "host: " << emit_graph6(cert.host) << "\n";
    out << "base_order: " << cert.base_order << "\n";
    out << "added_count: " << cert.added_count << "\n";
    out << "construction: " << to_string(cert.tag) << "\n";
    out << "verified_prime: " << (cert.verified_prime ? "yes" : "no") << "\n";
    out << "stable_added_set: " << (cert.stable_added_set ? "yes" : "no") << "\n";
    return out.str();
}

std::string oracle_json(const OracleVerdict& verdict) {
    json j;
    j["p"] = verdict.exceeded_cap ? json(nullptr) : json(verdict.p_value);
    j["exceeded_cap"] = verdict.exceeded_cap;
    j["search_space"] = verdict.search_space;
    j["witness"] = verdict.witness ? certificate_to_json_value(*verdict.witness) : json(nullptr);
    return j.dump();
}

std::string oracle_human(const OracleVerdict& verdict) {
    std::ostringstream out;
    if (verdict.exceeded_cap)
        out << "p: exceeds cap\n";
    else
        out << "p: " << verdict.p_value << "\n";
    out << "candidates_examined: " << verdict.search_space << "\n";
    if (verdict.witness) out << "witness: " << emit_graph6(verdict.witness->host) << "\n";
    return out.str();
}

namespace {

json failure_to_json(const SweepFailure& f) {
    json j;
    j["graph6"] = f.graph6;
    j["check"] = f.check;
    j["expected"] = f.expected;
    j["actual"] = f.actual;
    return j;
}

}  // namespace

std::string sweep_json(const SweepSummary& summary) {
    json j;
    j["order"] = summary.order;
    j["check"] = to_string(summary.check);
    j["graph_count"] = summary.graph_count;
    j["failures"] = json::array();
    for (const SweepFailure& f : summary.failures) j["failures"].push_back(failure_to_json(f));
    return j.dump();
}

std::string sweep_human(const SweepSummary& summary) {
    std::ostringstream out;
    out << summary.graph_count << " graphs, " << summary.failures.size() << " failures\n";
    for (const SweepFailure& f : summary.failures) out << failure_to_json(f).dump() << "\n";
    return out.str();
}

namespace {

void mdtree_human_node(const MDTree& tree, int i, int depth, std::ostringstream& out) {
    const MDNode& node = tree.at(i);
    for (int d = 0; d < depth; ++d) out << "  ";
    if (node.label == NodeLabel::Leaf)
        out << node.vertices.first() << "\n";
    else {
        out << to_string(node.label) << " " << node.vertices.to_string() << "\n";
        for (int c : node.children) mdtree_human_node(tree, c, depth + 1, out);
    }
}

struct CertificateCheck {
    bool ok = false;
    json detail;
};

CertificateCheck run_certificate_check(const std::string& cert_json, bool with_oracle,
                                       int verify_cap) {
    std::string host_text;
    int base_order = 0;
    std::optional<int> claimed_added;
    try {
        json in = json::parse(cert_json);
        if (!in.is_object() || !in.contains("host") || !in.contains("base_order"))
            throw ParseError("certificate: expected an object with host and base_order");
        host_text = in["host"].get<std::string>();
        base_order = in["base_order"].get<int>();
        if (in.contains("added_count")) claimed_added = in["added_count"].get<int>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    }

    Graph host = parse_graph6(host_text);
    if (base_order < 0 || base_order > host.order())
        throw ParseError("certificate: base_order outside the host order");
    int added = host.order() - base_order;

    VertexSet base_set(host.order());
    for (int v = 0; v < base_order; ++v) base_set.insert(v);
    Graph base = host.induced(base_set);

    CertificateCheck check;
    json& d = check.detail;
    d["host_order"] = host.order();
    d["added_count"] = added;

    bool counts_ok = !claimed_added || *claimed_added == added;
    d["added_count_consistent"] = counts_ok;

    PrimeBoundResult pb = prime_bound(base);
    d["prime_bound"] = pb.value;
    bool optimal = added == pb.value;
    d["optimal"] = optimal;

    bool prime_checked = host.order() <= verify_cap;
    bool prime = prime_checked && is_prime(host);
    d["host_prime"] = prime_checked ? json(prime) : json(nullptr);

    bool oracle_ok = true;
    if (with_oracle) {
        OracleVerdict verdict = brute_force_prime_bound(base, std::max(added, pb.value));
        oracle_ok = !verdict.exceeded_cap && verdict.p_value == added;
        d["oracle_p"] = verdict.exceeded_cap ? json(nullptr) : json(verdict.p_value);
    }

    check.ok = counts_ok && optimal && prime_checked && prime && oracle_ok;
    d["ok"] = check.ok;
    return check;
}

}  // namespace

std::string mdtree_human(const Graph& g) {
    MDTree tree = build_md_tree(g);
    std::ostringstream out;
    mdtree_human_node(tree, tree.root, 0, out);
    return out.str();
}

std::string certificate_check_json(const std::string& cert_json, bool with_oracle,
                                   int verify_cap) {
    return run_certificate_check(cert_json, with_oracle, verify_cap).detail.dump();
}

std::string certificate_check_human(const std::string& cert_json, bool with_oracle,
                                    int verify_cap) {
    CertificateCheck check = run_certificate_check(cert_json, with_oracle, verify_cap);
    std::ostringstream out;
    for (auto& [key, value] : check.detail.items()) out << key << ": " << value.dump() << "\n";
    return out.str();
}

bool certificate_check_ok(const std::string& cert_json, bool with_oracle, int verify_cap) {
    return run_certificate_check(cert_json, with_oracle, verify_cap).ok;
}

}  // namespace primex
