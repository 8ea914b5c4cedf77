#include "purerank/edge_list.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "purerank/errors.hpp"

namespace purerank {

namespace {

// Splits into at most 4 fields; a 4th field marks the line as malformed.
std::size_t split_fields(std::string_view line, std::optional<char> delim,
                         std::string_view fields[4]) {
    std::size_t count = 0;
    std::size_t pos = 0;
    auto is_sep = [&](char c) {
        return delim ? c == *delim : (c == ' ' || c == '\t' || c == '\r');
    };
    while (pos < line.size()) {
        while (pos < line.size() && is_sep(line[pos]))
            ++pos;
        if (pos >= line.size())
            break;
        std::size_t start = pos;
        while (pos < line.size() && !is_sep(line[pos]))
            ++pos;
        if (count < 4)
            fields[count] = line.substr(start, pos - start);
        ++count;
        if (count > 3)
            break;
    }
    return count;
}

double parse_weight(std::string_view field, std::size_t line_no) {
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), w);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError("cannot parse weight '" + std::string(field) + "'", line_no);
    if (!std::isfinite(w) || w <= 0.0)
        throw ValidationError("line " + std::to_string(line_no) +
                              ": edge weight must be finite and > 0");
    return w;
}

} // namespace

Graph load_edge_list(std::istream& in, const LoadOptions& options) {
    std::vector<Graph::LabeledEdge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        std::string_view fields[4];
        std::size_t n = split_fields(view, options.delimiter, fields);
        if (n == 0)
            continue;
        if (fields[0].front() == '#')
            continue;
        if (n < 2 || n > 3)
            throw ParseError("expected 'src dst' or 'src dst weight', got " + std::to_string(n) +
                                 " fields",
                             line_no);
        if (n == 2 && options.weights == LoadOptions::Weights::Required)
            throw ParseError("weight column required but missing", line_no);
        if (n == 3 && options.weights == LoadOptions::Weights::Forbidden)
            throw ParseError("unexpected weight column", line_no);
        double w = n == 3 ? parse_weight(fields[2], line_no) : 1.0;
        edges.push_back({std::string(fields[0]), std::string(fields[1]), w});
    }
    if (in.bad())
        throw IoError("read failure on edge-list stream");
    if (edges.empty())
        throw ValidationError("empty input: graphs must have at least one node");
    return Graph::from_labeled_edges(edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    char buf[32];
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto targets = g.out_targets(u);
        auto weights = g.out_weights(u);
        for (std::size_t e = 0; e < targets.size(); ++e) {
            std::snprintf(buf, sizeof buf, "%.17g", weights[e]);
            out << g.label(u) << '\t' << g.label(targets[e]) << '\t' << buf << '\n';
        }
    }
}

void write_label_map(std::ostream& out, const Graph& g) {
    out << "external_id,dense_id\n";
    for (NodeId i = 0; i < g.node_count(); ++i)
        out << g.label(i) << ',' << i << '\n';
}

} // namespace purerank
