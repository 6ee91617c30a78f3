#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "specgraph/error.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

namespace detail {
extern const std::string_view kBuckyEdges;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto start = s.find_first_not_of(" \t", pos);
        if (start == std::string_view::npos) break;
        auto end = s.find_first_of(" \t", start);
        if (end == std::string_view::npos) end = s.size();
        out.push_back(s.substr(start, end - start));
        pos = end;
    }
    return out;
}

std::optional<std::size_t> parse_index(std::string_view tok) {
    std::size_t value = 0;
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

std::optional<double> parse_real(std::string_view tok) {
    double value = 0.0;
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
    std::optional<std::size_t> declared_nodes;
    std::vector<WeightedEdge> edges;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;  // pair -> line
    std::map<std::size_t, std::size_t> first_use;                      // node -> line
    bool saw_content = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const std::string_view line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;

        if (line.empty() || line.front() == '#') continue;
        const auto tok = tokens(line);

        if (tok.front() == "nodes") {
            if (saw_content) throw ParseError(line_no, "'nodes' header must come before any edge");
            if (tok.size() != 2) throw ParseError(line_no, "expected 'nodes N'");
            const auto n = parse_index(tok[1]);
            if (!n || *n == 0) throw ParseError(line_no, "node count must be a positive integer");
            declared_nodes = *n;
            saw_content = true;
            continue;
        }
        saw_content = true;

        if (tok.size() != 2 && tok.size() != 3) {
            throw ParseError(line_no, "expected 'u v [w]', got " + std::to_string(tok.size()) + " fields");
        }
        const auto u = parse_index(tok[0]);
        const auto v = parse_index(tok[1]);
        if (!u || !v) throw ParseError(line_no, "node ids must be nonnegative integers");
        double w = 1.0;
        if (tok.size() == 3) {
            const auto parsed = parse_real(tok[2]);
            if (!parsed || !std::isfinite(*parsed)) throw ParseError(line_no, "weight is not a number");
            if (*parsed < 0.0) throw ParseError(line_no, "negative weight");
            if (*parsed == 0.0) throw ParseError(line_no, "weight must be positive");
            w = *parsed;
        }
        if (*u == *v) throw ParseError(line_no, "self-loop at node " + std::to_string(*u));
        if (declared_nodes && (*u >= *declared_nodes || *v >= *declared_nodes)) {
            throw ParseError(line_no, "node id exceeds declared node count " + std::to_string(*declared_nodes));
        }
        const auto key = std::minmax(*u, *v);
        if (const auto it = seen.find(key); it != seen.end()) {
            throw ParseError(line_no, "duplicate edge {" + std::to_string(key.first) + ", " +
                                          std::to_string(key.second) + "} (first on line " +
                                          std::to_string(it->second) + ")");
        }
        seen.emplace(key, line_no);
        first_use.emplace(*u, line_no);
        first_use.emplace(*v, line_no);
        edges.push_back({*u, *v, w});
    }

    std::size_t n = 0;
    if (declared_nodes) {
        n = *declared_nodes;
    } else {
        if (edges.empty()) throw ParseError(0, "graph has no edges and no 'nodes' header");
        const std::size_t max_id = first_use.rbegin()->first;
        n = max_id + 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!first_use.contains(i)) {
                throw ParseError(first_use.rbegin()->second,
                                 "non-contiguous node ids: node " + std::to_string(i) +
                                     " never appears (add a 'nodes N' header for isolated nodes)");
            }
        }
    }
    return WeightedGraph::from_edges(n, edges);
}

std::string serialize_graph(const WeightedGraph& g) {
    std::string out = "nodes " + std::to_string(g.size()) + "\n";
    char buf[64];
    for (const auto& e : g.edges()) {
        // Shortest representation that parses back to the same double.
        const auto res = std::to_chars(buf, buf + sizeof buf, e.weight);
        out += std::to_string(e.u) + ' ' + std::to_string(e.v) + ' ';
        out.append(buf, res.ptr);
        out += '\n';
    }
    return out;
}

WeightedGraph bucky() { return parse_graph(detail::kBuckyEdges); }

}  // namespace specgraph
