#include "graph_io.hpp"

#include <cctype>
#include <sstream>

#include "errors.hpp"

namespace primex {

namespace {

constexpr int kGraph6Lo = 63;   // '?'
constexpr int kGraph6Hi = 125;  // '}' ; 126 starts the unsupported long form
constexpr int kMaxOrder = 62;

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::string_view strip_trailing_ws(std::string_view s) {
    while (!s.empty() && is_ws(s.back())) s.remove_suffix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::string_view body = strip_trailing_ws(text);
    if (body.empty()) throw ParseError("graph6: empty input", 0);

    unsigned char header = static_cast<unsigned char>(body[0]);
    if (header == 126)
        throw ParseError("graph6: long-form header not supported (order > 62)", 0);
    if (header < kGraph6Lo || header > kGraph6Hi)
        throw ParseError("graph6: invalid header byte", 0);
    int n = header - kGraph6Lo;

    long bits = static_cast<long>(n) * (n - 1) / 2;
    std::size_t body_bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (body.size() < 1 + body_bytes)
        throw ParseError("graph6: truncated body, expected " +
                             std::to_string(1 + body_bytes) + " bytes",
                         static_cast<long>(body.size()));
    if (body.size() > 1 + body_bytes)
        throw ParseError("graph6: trailing garbage", static_cast<long>(1 + body_bytes));

    GraphBuilder b(n);
    long bit = 0;
    for (std::size_t i = 1; i < body.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(body[i]);
        if (c < kGraph6Lo || c > kGraph6Hi + 1)
            throw ParseError("graph6: invalid body byte", static_cast<long>(i));
        int group = c - kGraph6Lo;
        for (int k = 5; k >= 0; --k, ++bit) {
            bool set = (group >> k) & 1;
            if (bit >= bits) {
                if (set) throw ParseError("graph6: nonzero padding bits", static_cast<long>(i));
                continue;
            }
            if (set) {
                // pair index `bit` in the order (0,1),(0,2),(1,2),(0,3),...
                long t = bit;
                int v = 1;
                while (t >= v) {
                    t -= v;
                    ++v;
                }
                b.add_edge(static_cast<int>(t), v);
            }
        }
    }
    return b.build();
}

std::string emit_graph6(const Graph& g) {
    int n = g.order();
    if (n > kMaxOrder)
        throw DomainError("graph6 emission limited to orders <= 62, got " + std::to_string(n));
    std::string out;
    out += static_cast<char>(n + kGraph6Lo);

    int group = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(group + kGraph6Lo);
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>((group << (6 - filled)) + kGraph6Lo);
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = strip_trailing_ws(line);
        if (sv.empty()) continue;
        std::istringstream ls{std::string(sv)};
        if (n < 0) {
            std::string tag;
            long order = -1;
            if (!(ls >> tag >> order) || tag != "n" || order < 0 || !(ls >> std::ws).eof())
                throw ParseError("edge list: expected header \"n <order>\"", line_no);
            n = static_cast<int>(order);
            continue;
        }
        long u = -1, v = -1;
        if (!(ls >> u >> v) || !(ls >> std::ws).eof())
            throw ParseError("edge list: expected \"u v\"", line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: vertex id out of range [0, " + std::to_string(n) + ")",
                             line_no);
        if (u == v) throw ParseError("edge list: self-loop", line_no);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("edge list: missing header \"n <order>\"", line_no);
    return Graph::from_edges(n, edges);
}

Graph parse_graph_auto(std::string_view text) {
    std::string_view head = text;
    while (!head.empty() && is_ws(head.front())) head.remove_prefix(1);
    if (head.size() >= 2 && head[0] == 'n' && (head[1] == ' ' || head[1] == '\t'))
        return parse_edge_list(head);
    return parse_graph6(head);
}

}  // namespace primex
