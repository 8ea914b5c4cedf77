#include "purerank/multi_attribute.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <set>

#include "purerank/errors.hpp"

namespace purerank {

MultiGraph MultiGraph::from_edges(const std::vector<RawEdge>& edges) {
    if (edges.empty())
        throw ValidationError("multi-attribute graph must have at least one edge");
    // Attributes carrying any negative weight are split into "<a>+"/"<a>-";
    // all-positive attributes keep their original token.
    std::set<std::string> has_negative;
    for (const auto& e : edges) {
        if (!std::isfinite(e.weight) || e.weight == 0.0)
            throw ValidationError("multi-attribute edge weights must be finite and nonzero");
        if (e.weight < 0.0)
            has_negative.insert(e.attribute);
    }

    MultiGraph mg;
    std::unordered_map<std::string, NodeId> node_index;
    std::unordered_map<std::string, std::size_t> attr_index;
    auto intern_node = [&](const std::string& label) -> NodeId {
        auto [it, inserted] = node_index.try_emplace(label, static_cast<NodeId>(mg.labels_.size()));
        if (inserted)
            mg.labels_.push_back(label);
        return it->second;
    };
    auto intern_attr = [&](const std::string& token) -> std::size_t {
        auto [it, inserted] = attr_index.try_emplace(token, mg.attributes_.size());
        if (inserted)
            mg.attributes_.push_back(token);
        return it->second;
    };
    for (const auto& e : edges) {
        Edge out;
        out.src = intern_node(e.src);
        out.dst = intern_node(e.dst);
        if (has_negative.contains(e.attribute)) {
            out.attribute = intern_attr(e.attribute + (e.weight < 0.0 ? "-" : "+"));
            out.weight = std::abs(e.weight);
        } else {
            out.attribute = intern_attr(e.attribute);
            out.weight = e.weight;
        }
        mg.edges_.push_back(out);
    }
    return mg;
}

std::optional<std::size_t> MultiGraph::find_attribute(const std::string& token) const {
    for (std::size_t a = 0; a < attributes_.size(); ++a)
        if (attributes_[a] == token)
            return a;
    return std::nullopt;
}

MultiGraph load_multi_edge_list(
    std::istream& in, const std::unordered_map<std::string, std::string>* node_attributes) {
    std::vector<MultiGraph::RawEdge> edges;
    std::string line;
    std::size_t line_no = 0;
    auto node_attr = [&](const std::string& label) -> std::string {
        auto it = node_attributes->find(label);
        return it == node_attributes->end() ? std::string("_") : it->second;
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                ++pos;
            if (pos >= line.size())
                break;
            std::size_t start = pos;
            while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r')
                ++pos;
            fields.push_back(line.substr(start, pos - start));
        }
        if (fields.empty())
            continue;
        if (fields[0].front() == '#')
            continue;
        if (fields.size() != 4)
            throw ParseError("expected 'src dst attribute weight', got " +
                                 std::to_string(fields.size()) + " fields",
                             line_no);
        double w = 0.0;
        auto [ptr, ec] = std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(), w);
        if (ec != std::errc() || ptr != fields[3].data() + fields[3].size())
            throw ParseError("cannot parse weight '" + fields[3] + "'", line_no);
        if (!std::isfinite(w) || w == 0.0)
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": weight must be finite and nonzero");
        std::string attribute = fields[2];
        if (node_attributes)
            attribute += "|" + node_attr(fields[0]) + "|" + node_attr(fields[1]);
        edges.push_back({fields[0], fields[1], attribute, w});
    }
    if (in.bad())
        throw IoError("read failure on multi-attribute edge list");
    if (edges.empty())
        throw ValidationError("empty multi-attribute edge list");
    return MultiGraph::from_edges(edges);
}

SplitNetwork build_splitting_network(const MultiGraph& mg) {
    const std::size_t n = mg.node_count();
    const std::size_t m = mg.attribute_count();
    if (m == 0)
        throw ValidationError("splitting network requires at least one attribute");

    SplitNetwork net;
    net.original_node_count = n;
    net.attribute_count = m;

    std::vector<std::string> labels;
    labels.reserve(n * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t i = 0; i < n; ++i)
            labels.push_back(mg.node_label(static_cast<NodeId>(i)) + "@" +
                             mg.attribute_token(a));

    std::vector<std::tuple<NodeId, NodeId, double>> edges;
    edges.reserve(mg.edges().size() * m);
    for (const auto& e : mg.edges()) {
        NodeId dst_copy = net.copy_index(e.dst, e.attribute);
        for (std::size_t a = 0; a < m; ++a)
            edges.emplace_back(net.copy_index(e.src, a), dst_copy, e.weight);
    }
    net.graph = Graph::from_dense_edges(n * m, std::move(edges), std::move(labels));
    return net;
}

SplitResult multi_purerank(const MultiGraph& mg, const SolverOptions& opts, unsigned workers) {
    SplitResult out;
    out.network = build_splitting_network(mg);
    out.result = compute(out.network.graph, opts, workers);
    out.scores.assign(mg.node_count(), std::vector<double>(mg.attribute_count(), 0.0));
    for (NodeId copy = 0; copy < out.network.graph.node_count(); ++copy)
        out.scores[out.network.original_of(copy)][out.network.attribute_of(copy)] =
            out.result.pi[copy];
    return out;
}

std::vector<double> net_score(const SplitResult& result, std::size_t positive_attribute,
                              std::size_t negative_attribute) {
    if (positive_attribute >= result.network.attribute_count ||
        negative_attribute >= result.network.attribute_count)
        throw ValidationError("attribute index out of range");
    std::vector<double> net(result.scores.size(), 0.0);
    for (std::size_t j = 0; j < result.scores.size(); ++j)
        net[j] = result.scores[j][positive_attribute] - result.scores[j][negative_attribute];
    return net;
}

} // namespace purerank
