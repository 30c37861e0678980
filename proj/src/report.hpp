#ifndef PRIMEX_REPORT_HPP
#define PRIMEX_REPORT_HPP

#include <string>

#include "extensions.hpp"
#include "graph.hpp"
#include "oracle.hpp"

namespace primex {

// Renderings of the analysis results. JSON objects have a fixed key set and
// alphabetical key order, so repeated runs are byte-identical.

std::string analyze_json(const Graph& g);
std::string analyze_human(const Graph& g);

std::string certificate_json(const ExtensionCertificate& cert);
std::string certificate_human(const ExtensionCertificate& cert);

std::string oracle_json(const OracleVerdict& verdict);
std::string oracle_human(const OracleVerdict& verdict);

std::string sweep_json(const SweepSummary& summary);
// One summary line plus one JSON line per failure.
std::string sweep_human(const SweepSummary& summary);

// Indented text rendering of the decomposition tree.
std::string mdtree_human(const Graph& g);

// Re-validates a certificate produced by the extend operations: parses the
// host, recomputes the bound of the base graph, re-checks primality, and
// optionally cross-checks against the exhaustive search when feasible.
// Returns a JSON report; `ok` in the report tells whether everything holds.
std::string certificate_check_json(const std::string& cert_json, bool with_oracle,
                                   int verify_cap);
std::string certificate_check_human(const std::string& cert_json, bool with_oracle,
                                    int verify_cap);
bool certificate_check_ok(const std::string& cert_json, bool with_oracle, int verify_cap);

}  // namespace primex

#endif
