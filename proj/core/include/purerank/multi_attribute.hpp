#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "purerank/purerank.hpp"

namespace purerank {

/// Directed network whose links carry one of m attributes. Stored weights
/// are strictly positive: edges ingested with negative weights are re-homed
/// under a derived attribute "<a>-" with the sign flipped, and the positive
/// remainder of a split attribute moves to "<a>+".
class MultiGraph {
public:
    struct RawEdge {
        std::string src;
        std::string dst;
        std::string attribute;
        double weight = 1.0;
    };

    struct Edge {
        NodeId src = 0;
        NodeId dst = 0;
        std::size_t attribute = 0;
        double weight = 0.0;
    };

    static MultiGraph from_edges(const std::vector<RawEdge>& edges);

    std::size_t node_count() const noexcept { return labels_.size(); }
    std::size_t attribute_count() const noexcept { return attributes_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::string& node_label(NodeId i) const { return labels_[i]; }
    const std::vector<std::string>& node_labels() const noexcept { return labels_; }
    const std::string& attribute_token(std::size_t a) const { return attributes_[a]; }
    const std::vector<std::string>& attribute_tokens() const noexcept { return attributes_; }
    std::optional<std::size_t> find_attribute(const std::string& token) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::string> attributes_;
    std::vector<Edge> edges_;
};

/// Lines "src dst attribute weight" ('#' comments; attribute is a token
/// mapped in first-appearance order; weight may be negative, which triggers
/// sign-splitting). When `node_attributes` is given, every link attribute is
/// replaced by the composite "link|src-attr|dst-attr" tuple, reducing a
/// node-attributed network to a link-attributed one.
MultiGraph load_multi_edge_list(
    std::istream& in,
    const std::unordered_map<std::string, std::string>* node_attributes = nullptr);

/// The single-attribute splitting network: every node i becomes m copies
/// i^(1)..i^(m); each original edge (i,j;a',w) induces, for every a, the
/// edge i^(a) -> j^(a') with weight w. Copy j^(a') therefore receives only
/// attribute-a' inlinks while all copies of i share identical out-rows.
struct SplitNetwork {
    Graph graph;
    std::size_t original_node_count = 0;
    std::size_t attribute_count = 0;

    /// Copies are laid out attribute-major: (i, a) <-> a*N + i.
    NodeId copy_index(NodeId original, std::size_t attribute) const {
        return static_cast<NodeId>(attribute * original_node_count + original);
    }
    NodeId original_of(NodeId copy) const {
        return static_cast<NodeId>(copy % original_node_count);
    }
    std::size_t attribute_of(NodeId copy) const { return copy / original_node_count; }
};

SplitNetwork build_splitting_network(const MultiGraph& mg);

/// PureRank of the splitting network, gathered into one m-vector per
/// original node. scores[j][a] is the score of copy j^(a); the scores sum
/// to 1 over all copies.
struct SplitResult {
    SplitNetwork network;
    PureRankResult result;
    std::vector<std::vector<double>> scores;
};

SplitResult multi_purerank(const MultiGraph& mg, const SolverOptions& opts = {},
                           unsigned workers = 0);

/// Per-node difference score(pos) - score(neg); values lie in [-1, 1].
std::vector<double> net_score(const SplitResult& result, std::size_t positive_attribute,
                              std::size_t negative_attribute);

} // namespace purerank
