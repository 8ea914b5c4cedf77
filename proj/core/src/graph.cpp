#include "purerank/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "purerank/errors.hpp"

namespace purerank {

Graph Graph::from_labeled_edges(const std::vector<LabeledEdge>& edges) {
    Graph g;
    std::vector<std::tuple<NodeId, NodeId, double>> dense;
    dense.reserve(edges.size());
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> index;
    auto intern = [&](const std::string& label) -> NodeId {
        auto [it, inserted] = index.try_emplace(label, static_cast<NodeId>(labels.size()));
        if (inserted)
            labels.push_back(label);
        return it->second;
    };
    for (const auto& e : edges) {
        NodeId u = intern(e.src);
        NodeId v = intern(e.dst);
        dense.emplace_back(u, v, e.weight);
    }
    if (labels.empty())
        throw ValidationError("graph must have at least one node");
    g.index_of_ = std::move(index);
    g.build(labels.size(), std::move(dense), std::move(labels));
    return g;
}

Graph Graph::from_dense_edges(std::size_t node_count,
                              std::vector<std::tuple<NodeId, NodeId, double>> edges,
                              std::vector<std::string> labels) {
    if (node_count == 0)
        throw ValidationError("graph must have at least one node");
    if (labels.empty()) {
        labels.reserve(node_count);
        for (std::size_t i = 0; i < node_count; ++i)
            labels.push_back(std::to_string(i));
    } else if (labels.size() != node_count) {
        throw ValidationError("label list does not match node count");
    }
    Graph g;
    g.index_of_.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) {
        auto [it, inserted] = g.index_of_.try_emplace(labels[i], static_cast<NodeId>(i));
        if (!inserted)
            throw ValidationError("duplicate node label: " + labels[i]);
    }
    g.build(node_count, std::move(edges), std::move(labels));
    return g;
}

void Graph::build(std::size_t n, std::vector<std::tuple<NodeId, NodeId, double>>&& edges,
                  std::vector<std::string>&& labels) {
    for (const auto& [u, v, w] : edges) {
        if (u >= n || v >= n)
            throw ValidationError("edge endpoint out of range");
        if (!std::isfinite(w) || w <= 0.0)
            throw ValidationError("edge weights must be finite and > 0");
    }
    // Stable sort by (src, dst) keeps input order within duplicate groups,
    // so merged sums accumulate deterministically.
    std::stable_sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b))
            return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });

    labels_ = std::move(labels);
    out_offsets_.assign(n + 1, 0);
    out_targets_.clear();
    out_weights_.clear();
    out_targets_.reserve(edges.size());
    out_weights_.reserve(edges.size());
    std::size_t i = 0;
    while (i < edges.size()) {
        auto [u, v, w] = edges[i];
        double sum = w;
        std::size_t j = i + 1;
        while (j < edges.size() && std::get<0>(edges[j]) == u && std::get<1>(edges[j]) == v) {
            sum += std::get<2>(edges[j]);
            ++j;
        }
        out_targets_.push_back(v);
        out_weights_.push_back(sum);
        out_offsets_[u + 1] += 1;
        i = j;
    }
    for (std::size_t k = 1; k <= n; ++k)
        out_offsets_[k] += out_offsets_[k - 1];

    out_weight_.assign(n, 0.0);
    for (NodeId u = 0; u < n; ++u) {
        double sum = 0.0;
        for (double w : out_weights(u))
            sum += w;
        out_weight_[u] = sum;
    }

    const std::size_t m = out_targets_.size();
    in_offsets_.assign(n + 1, 0);
    for (std::size_t e = 0; e < m; ++e)
        in_offsets_[out_targets_[e] + 1] += 1;
    for (std::size_t k = 1; k <= n; ++k)
        in_offsets_[k] += in_offsets_[k - 1];
    in_sources_.resize(m);
    in_weights_.resize(m);
    std::vector<std::size_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
    for (NodeId u = 0; u < n; ++u) {
        for (std::size_t e = out_offsets_[u]; e < out_offsets_[u + 1]; ++e) {
            std::size_t pos = cursor[out_targets_[e]]++;
            in_sources_[pos] = u;
            in_weights_[pos] = out_weights_[e];
        }
    }
}

NormalizedRow Graph::normalized_row(NodeId i) const {
    if (i >= node_count())
        throw std::out_of_range("node id " + std::to_string(i) + " out of range");
    return NormalizedRow(out_targets(i), out_weights(i), out_weight_[i]);
}

std::optional<NodeId> Graph::find(std::string_view label) const {
    auto it = index_of_.find(std::string(label));
    if (it == index_of_.end())
        return std::nullopt;
    return it->second;
}

} // namespace purerank
