#include "primex.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "errors.hpp"
#include "extensions.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "md_tree.hpp"
#include "modules.hpp"
#include "oracle.hpp"
#include "prime_bound.hpp"
#include "report.hpp"

struct px_graph {
    primex::Graph g;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

px_status fail(px_status code, const std::string& message) {
    t_last_error = message;
    return code;
}

// Runs fn, mapping the library's exception hierarchy onto status codes.
template <typename Fn>
px_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const primex::ParseError& e) {
        return fail(PX_ERR_PARSE, e.offset >= 0 ? std::string(e.what()) + " (at " +
                                                      std::to_string(e.offset) + ")"
                                                : std::string(e.what()));
    } catch (const primex::DomainError& e) {
        return fail(PX_ERR_DOMAIN, e.what());
    } catch (const primex::LimitError& e) {
        return fail(PX_ERR_LIMIT, e.what());
    } catch (const primex::VerifyError& e) {
        return fail(PX_ERR_VERIFY, e.what());
    } catch (const std::exception& e) {
        return fail(PX_ERR_INTERNAL, e.what());
    }
}

px_status make_graph(primex::Graph g, px_graph** out) {
    *out = new px_graph{std::move(g)};
    return PX_OK;
}

bool valid_format(px_format f, bool dot_allowed) {
    if (f == PX_FORMAT_HUMAN || f == PX_FORMAT_JSON) return true;
    return f == PX_FORMAT_DOT && dot_allowed;
}

}  // namespace

extern "C" {

const char* px_version(void) { return "1.0.0"; }

const char* px_last_error(void) { return t_last_error.c_str(); }

void px_string_free(char* s) { std::free(s); }

px_status px_graph_parse(const char* text, px_graph** out) {
    if (!text || !out) return fail(PX_ERR_ARGUMENT, "null argument");
    return guarded([&] { return make_graph(primex::parse_graph_auto(text), out); });
}

px_status px_graph_parse_graph6(const char* text, px_graph** out) {
    if (!text || !out) return fail(PX_ERR_ARGUMENT, "null argument");
    return guarded([&] { return make_graph(primex::parse_graph6(text), out); });
}

px_status px_graph_parse_edge_list(const char* text, px_graph** out) {
    if (!text || !out) return fail(PX_ERR_ARGUMENT, "null argument");
    return guarded([&] { return make_graph(primex::parse_edge_list(text), out); });
}

px_status px_graph_format_graph6(const px_graph* g, char** out) {
    if (!g || !out) return fail(PX_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = dup_string(primex::emit_graph6(g->g));
        return PX_OK;
    });
}

px_status px_graph_complement(const px_graph* g, px_graph** out) {
    if (!g || !out) return fail(PX_ERR_ARGUMENT, "null argument");
    return guarded([&] { return make_graph(g->g.complement(), out); });
}

int px_graph_order(const px_graph* g) { return g ? g->g.order() : -1; }

long px_graph_edge_count(const px_graph* g) { return g ? g->g.edge_count() : -1; }

int px_graph_adjacent(const px_graph* g, int u, int v) {
    if (!g || u < 0 || v < 0 || u >= g->g.order() || v >= g->g.order()) return -1;
    return g->g.adjacent(u, v) ? 1 : 0;
}

void px_graph_free(px_graph* g) { delete g; }

int px_graph_is_prime(const px_graph* g) {
    if (!g) return -1;
    return primex::is_prime(g->g) ? 1 : 0;
}

px_status px_analyze(const px_graph* g, px_format format, char** out) {
    if (!g || !out) return fail(PX_ERR_ARGUMENT, "null argument");
    if (!valid_format(format, false)) return fail(PX_ERR_ARGUMENT, "unsupported format");
    return guarded([&] {
        *out = dup_string(format == PX_FORMAT_JSON ? primex::analyze_json(g->g)
                                                   : primex::analyze_human(g->g));
        return PX_OK;
    });
}

px_status px_mdtree(const px_graph* g, px_format format, char** out) {
    if (!g || !out) return fail(PX_ERR_ARGUMENT, "null argument");
    if (!valid_format(format, true)) return fail(PX_ERR_ARGUMENT, "unsupported format");
    return guarded([&] {
        if (format == PX_FORMAT_HUMAN) {
            *out = dup_string(primex::mdtree_human(g->g));
        } else {
            primex::MDTree tree = primex::build_md_tree(g->g);
            *out = dup_string(format == PX_FORMAT_JSON ? primex::mdtree_to_json(tree)
                                                       : primex::mdtree_to_dot(tree));
        }
        return PX_OK;
    });
}

px_status px_prime_bound(const px_graph* g, int* value, char** case_tag) {
    if (!g || !value) return fail(PX_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        primex::PrimeBoundResult r = primex::prime_bound(g->g);
        *value = r.value;
        if (case_tag) *case_tag = dup_string(primex::to_string(r.case_tag));
        return PX_OK;
    });
}

px_status px_extend(const px_graph* g, px_extend_mode mode, int verify_cap, px_format format,
                    char** out) {
    if (!g || !out) return fail(PX_ERR_ARGUMENT, "null argument");
    if (!valid_format(format, false)) return fail(PX_ERR_ARGUMENT, "unsupported format");
    if (mode != PX_EXTEND_OPTIMAL && mode != PX_EXTEND_STABLE)
        return fail(PX_ERR_ARGUMENT, "unsupported extend mode");
    return guarded([&] {
        primex::ExtensionCertificate cert = mode == PX_EXTEND_OPTIMAL
                                                ? primex::optimal_extension(g->g)
                                                : primex::q_extension(g->g);
        if (verify_cap > 0) {
            primex::VerifyPolicy policy;
            policy.closure_cap = verify_cap;
            cert.verified_prime = primex::verify_certificate_prime(cert, policy);
        }
        *out = dup_string(format == PX_FORMAT_JSON ? primex::certificate_json(cert)
                                                   : primex::certificate_human(cert));
        if (!cert.verified_prime)
            return fail(PX_ERR_VERIFY, "extension host could not be verified prime");
        return PX_OK;
    });
}

px_status px_certificate_verify(const char* cert_json, int with_oracle, int verify_cap,
                                px_format format, char** out, int* ok_out) {
    if (!cert_json) return fail(PX_ERR_ARGUMENT, "null argument");
    if (!valid_format(format, false)) return fail(PX_ERR_ARGUMENT, "unsupported format");
    return guarded([&] {
        int cap = verify_cap > 0 ? verify_cap : primex::VerifyPolicy{}.closure_cap;
        if (out)
            *out = dup_string(format == PX_FORMAT_JSON
                                  ? primex::certificate_check_json(cert_json, with_oracle, cap)
                                  : primex::certificate_check_human(cert_json, with_oracle, cap));
        if (ok_out)
            *ok_out = primex::certificate_check_ok(cert_json, with_oracle, cap) ? 1 : 0;
        return PX_OK;
    });
}

px_status px_oracle_prime_bound(const px_graph* g, int p_cap, px_format format, char** out) {
    if (!g || !out) return fail(PX_ERR_ARGUMENT, "null argument");
    if (!valid_format(format, false)) return fail(PX_ERR_ARGUMENT, "unsupported format");
    return guarded([&] {
        primex::OracleVerdict verdict = primex::brute_force_prime_bound(g->g, p_cap);
        *out = dup_string(format == PX_FORMAT_JSON ? primex::oracle_json(verdict)
                                                   : primex::oracle_human(verdict));
        return PX_OK;
    });
}

px_status px_sweep(int order, const char* check, int jobs, px_format format, char** out,
                   long* failures_out) {
    if (!check || !out) return fail(PX_ERR_ARGUMENT, "null argument");
    if (!valid_format(format, false)) return fail(PX_ERR_ARGUMENT, "unsupported format");
    return guarded([&] {
        primex::SweepSummary summary =
            primex::labeled_graph_sweep(order, primex::parse_sweep_check(check), jobs);
        *out = dup_string(format == PX_FORMAT_JSON ? primex::sweep_json(summary)
                                                   : primex::sweep_human(summary));
        if (failures_out) *failures_out = static_cast<long>(summary.failures.size());
        return PX_OK;
    });
}

}  // extern "C"
