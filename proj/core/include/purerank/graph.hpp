#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace purerank {

using NodeId = std::uint32_t;

/// One row of the row-normalized matrix P: the out-edges of a node with
/// probabilities w_{i,j} / w_i^out. Empty for dangling nodes.
class NormalizedRow {
public:
    NormalizedRow(std::span<const NodeId> targets, std::span<const double> weights,
                  double out_weight)
        : targets_(targets), weights_(weights), out_weight_(out_weight) {}

    bool empty() const noexcept { return targets_.empty(); }
    std::size_t size() const noexcept { return targets_.size(); }
    NodeId target(std::size_t i) const { return targets_[i]; }
    double probability(std::size_t i) const { return weights_[i] / out_weight_; }
    double out_weight() const noexcept { return out_weight_; }

private:
    std::span<const NodeId> targets_;
    std::span<const double> weights_;
    double out_weight_;
};

/// Immutable sparse weighted digraph with dense node ids 0..N-1, forward and
/// reverse CSR adjacency, and a bijective map between external labels and
/// dense ids. All stored weights are strictly positive; duplicate (src,dst)
/// pairs are merged by summing. Safe for concurrent reads.
class Graph {
public:
    struct LabeledEdge {
        std::string src;
        std::string dst;
        double weight = 1.0;
    };

    /// Dense ids are assigned in first-appearance order over the edge list.
    static Graph from_labeled_edges(const std::vector<LabeledEdge>& edges);

    /// Builds over nodes 0..node_count-1; labels default to decimal ids.
    static Graph from_dense_edges(std::size_t node_count,
                                  std::vector<std::tuple<NodeId, NodeId, double>> edges,
                                  std::vector<std::string> labels = {});

    std::size_t node_count() const noexcept { return out_offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return out_targets_.size(); }

    double out_weight(NodeId i) const { return out_weight_[i]; }
    bool dangling(NodeId i) const { return out_weight_[i] == 0.0; }

    std::span<const NodeId> out_targets(NodeId i) const {
        return {out_targets_.data() + out_offsets_[i], out_offsets_[i + 1] - out_offsets_[i]};
    }
    std::span<const double> out_weights(NodeId i) const {
        return {out_weights_.data() + out_offsets_[i], out_offsets_[i + 1] - out_offsets_[i]};
    }

    /// Throws std::out_of_range for an invalid id.
    NormalizedRow normalized_row(NodeId i) const;

    std::span<const NodeId> in_sources(NodeId i) const {
        return {in_sources_.data() + in_offsets_[i], in_offsets_[i + 1] - in_offsets_[i]};
    }
    std::span<const double> in_weights(NodeId i) const {
        return {in_weights_.data() + in_offsets_[i], in_offsets_[i + 1] - in_offsets_[i]};
    }

    const std::string& label(NodeId i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<NodeId> find(std::string_view label) const;

    bool operator==(const Graph& other) const {
        return out_offsets_ == other.out_offsets_ && out_targets_ == other.out_targets_ &&
               out_weights_ == other.out_weights_ && labels_ == other.labels_;
    }

private:
    Graph() = default;
    void build(std::size_t n, std::vector<std::tuple<NodeId, NodeId, double>>&& edges,
               std::vector<std::string>&& labels);

    std::vector<std::size_t> out_offsets_{0};
    std::vector<NodeId> out_targets_;
    std::vector<double> out_weights_;
    std::vector<double> out_weight_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<NodeId> in_sources_;
    std::vector<double> in_weights_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_of_;
};

} // namespace purerank
