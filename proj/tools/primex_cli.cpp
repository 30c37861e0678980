// Command-line front end. Talks to the library exclusively through the
// public C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "primex.h"

namespace {

struct GraphDeleter {
    void operator()(px_graph* g) const { px_graph_free(g); }
};
using GraphHandle = std::unique_ptr<px_graph, GraphDeleter>;

struct StringDeleter {
    void operator()(char* s) const { px_string_free(s); }
};
using StringHandle = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(1);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_stdin() {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
}

// Inline text takes precedence, then --input, then stdin.
std::string gather_input(const std::string& inline_text, const std::string& input_path) {
    if (!inline_text.empty() && inline_text != "-") return inline_text;
    if (!input_path.empty()) return read_file(input_path);
    return read_stdin();
}

GraphHandle parse_graph_or_die(const std::string& text) {
    px_graph* g = nullptr;
    if (px_graph_parse(text.c_str(), &g) != PX_OK) die(px_last_error());
    return GraphHandle(g);
}

px_format parse_format(const std::string& name) {
    if (name == "human") return PX_FORMAT_HUMAN;
    if (name == "json") return PX_FORMAT_JSON;
    if (name == "dot") return PX_FORMAT_DOT;
    die("unknown format \"" + name + "\"");
}

void write_output(const std::string& out_path, const char* text) {
    if (out_path.empty()) {
        std::cout << text;
        if (*text && text[std::string(text).size() - 1] != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) die("cannot open " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modular decomposition, prime bounds, and certified prime extensions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(px_version()));

    std::string format = "human";
    std::string out_path;
    std::string input_path;
    app.add_option("--format", format, "output format: human, json, dot")->capture_default_str();
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--input", input_path, "read the graph (or certificate) from a file");

    std::string graph_text;
    int verify_cap = 0;
    int p_cap = 3;
    int sweep_order = 4;
    int jobs = 1;
    std::string extend_mode = "optimal";
    std::string sweep_check = "formula-vs-oracle";
    bool with_oracle = false;

    CLI::App* analyze = app.add_subcommand("analyze", "structure report and prime bound");
    analyze->fallthrough();
    analyze->add_option("graph", graph_text, "graph6 text (stdin when omitted)");

    CLI::App* mdtree = app.add_subcommand("mdtree", "modular decomposition tree");
    mdtree->fallthrough();
    mdtree->add_option("graph", graph_text, "graph6 text (stdin when omitted)");

    CLI::App* extend = app.add_subcommand("extend", "build a certified prime extension");
    extend->fallthrough();
    extend->add_option("graph", graph_text, "graph6 text (stdin when omitted)");
    extend->add_option("--mode", extend_mode, "optimal or stable-q")->capture_default_str();
    extend->add_option("--verify-cap", verify_cap,
                       "largest host order re-checked for primality");

    CLI::App* verify = app.add_subcommand("verify", "re-validate a certificate JSON");
    verify->fallthrough();
    verify->add_option("certificate", graph_text, "certificate JSON (stdin when omitted)");
    verify->add_flag("--with-oracle", with_oracle, "cross-check with the exhaustive search");
    verify->add_option("--verify-cap", verify_cap,
                       "largest host order re-checked for primality");

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive minimal prime extension");
    oracle->fallthrough();
    oracle->add_option("graph", graph_text, "graph6 text (stdin when omitted)");
    oracle->add_option("--p-cap", p_cap, "largest extension size searched")
        ->capture_default_str();

    CLI::App* sweep = app.add_subcommand("sweep", "cross-check all labelled graphs of an order");
    sweep->fallthrough();
    sweep->add_option("--order", sweep_order, "graph order (at most 6)")->capture_default_str();
    sweep->add_option("--check", sweep_check,
                      "formula-vs-oracle, tree-vs-bruteforce, construction-certification, "
                      "q-extension-contract, complement-symmetry")
        ->capture_default_str();
    sweep->add_option("--jobs", jobs, "worker threads")->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    px_format fmt = parse_format(format);

    if (analyze->parsed() || mdtree->parsed() || extend->parsed() || oracle->parsed()) {
        GraphHandle g = parse_graph_or_die(gather_input(graph_text, input_path));
        char* text = nullptr;
        px_status status = PX_OK;
        if (analyze->parsed()) {
            status = px_analyze(g.get(), fmt, &text);
        } else if (mdtree->parsed()) {
            status = px_mdtree(g.get(), fmt, &text);
        } else if (oracle->parsed()) {
            status = px_oracle_prime_bound(g.get(), p_cap, fmt, &text);
        } else {
            px_extend_mode mode;
            if (extend_mode == "optimal")
                mode = PX_EXTEND_OPTIMAL;
            else if (extend_mode == "stable-q")
                mode = PX_EXTEND_STABLE;
            else
                die("unknown extend mode \"" + extend_mode + "\"");
            status = px_extend(g.get(), mode, verify_cap, fmt, &text);
            if (status == PX_ERR_VERIFY && text) {
                // bug signal: emit the certificate, then fail
                StringHandle keep(text);
                write_output(out_path, keep.get());
                die(px_last_error());
            }
        }
        if (status != PX_OK) die(px_last_error());
        StringHandle keep(text);
        write_output(out_path, keep.get());
        return 0;
    }

    if (verify->parsed()) {
        std::string cert = gather_input(graph_text, input_path);
        char* text = nullptr;
        int ok = 0;
        if (px_certificate_verify(cert.c_str(), with_oracle ? 1 : 0, verify_cap, fmt, &text,
                                  &ok) != PX_OK)
            die(px_last_error());
        StringHandle keep(text);
        write_output(out_path, keep.get());
        return ok ? 0 : 1;
    }

    // sweep
    char* text = nullptr;
    long failures = 0;
    if (px_sweep(sweep_order, sweep_check.c_str(), jobs, fmt, &text, &failures) != PX_OK)
        die(px_last_error());
    StringHandle keep(text);
    write_output(out_path, keep.get());
    return failures == 0 ? 0 : 1;
}
