#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "purerank/graph.hpp"

namespace purerank {

enum class Label : std::uint8_t { Dangling, Transient, Recurrent };

/// Identifies one class of the partition: D, T, or R_k (k is 0-based).
struct ClassRef {
    Label kind = Label::Dangling;
    int index = 0;

    static ClassRef dangling() { return {Label::Dangling, 0}; }
    static ClassRef transient() { return {Label::Transient, 0}; }
    static ClassRef recurrent(int k) { return {Label::Recurrent, k}; }

    /// "D", "T", or "R_<k+1>".
    std::string name() const;

    bool operator==(const ClassRef&) const = default;
};

/// Partition of the node set into Class D (zero out-weight), Class T
/// (non-closed SCCs of the non-dangling subgraph) and recurrent classes
/// R_1..R_K (closed SCCs, numbered by ascending minimum dense node id).
/// Member lists are sorted ascending, which fixes the class-local layout
/// used by every downstream vector.
class Classification {
public:
    std::size_t node_count() const noexcept { return label_.size(); }
    int recurrent_class_count() const noexcept { return static_cast<int>(recurrent_.size()); }

    Label label(NodeId i) const { return label_[i]; }
    /// 0-based recurrent class of i, or -1 when i is not recurrent.
    int recurrent_class(NodeId i) const { return recurrent_index_[i]; }
    /// Position of i inside its class's member list.
    std::size_t local_index(NodeId i) const { return local_index_[i]; }
    /// SCC id from the decomposition of the non-dangling subgraph
    /// (diagnostic only; -1 for dangling nodes).
    int scc_id(NodeId i) const { return scc_id_[i]; }

    std::span<const NodeId> dangling_members() const { return dangling_; }
    std::span<const NodeId> transient_members() const { return transient_; }
    std::span<const NodeId> recurrent_members(int k) const { return recurrent_[k]; }
    std::span<const NodeId> members(ClassRef c) const;

    std::size_t class_size(ClassRef c) const { return members(c).size(); }

    /// All nonempty classes in canonical order: R_1..R_K, T, D.
    std::vector<ClassRef> nonempty_classes() const;

    bool operator==(const Classification&) const = default;

    friend Classification classify(const Graph& g);

private:
    std::vector<Label> label_;
    std::vector<int> recurrent_index_;
    std::vector<std::size_t> local_index_;
    std::vector<int> scc_id_;
    std::vector<NodeId> dangling_;
    std::vector<NodeId> transient_;
    std::vector<std::vector<NodeId>> recurrent_;
};

/// SCCs of the subgraph induced by `subset`, in reverse topological order of
/// the condensation: each SCC appears after every SCC it can reach. This
/// ordering is part of the contract.
std::vector<std::vector<NodeId>> scc_decompose(const Graph& g, std::span<const NodeId> subset);

Classification classify(const Graph& g);

/// Order-independent 64-bit digest over a class's member set and every edge
/// whose source lies in the class (targets and weights included). Equal
/// member-and-edge sets yield equal digests; used as the reuse key for
/// incremental recomputation.
std::uint64_t class_fingerprint(const Graph& g, const Classification& c, ClassRef cls);

/// Aggregate counts in the shape of the standard summary table.
struct ClassificationSummary {
    std::size_t total_links = 0;
    std::size_t total_nodes = 0;
    std::size_t nodes_recurrent = 0;
    std::size_t nodes_transient = 0;
    std::size_t nodes_dangling = 0;
    /// size -> number of recurrent classes of that size.
    std::map<std::size_t, std::size_t> recurrent_size_histogram;
};

ClassificationSummary summarize(const Graph& g, const Classification& c);

} // namespace purerank
