#pragma once

#include <iosfwd>
#include <optional>

#include "purerank/graph.hpp"

namespace purerank {

/// SNAP-style edge lists: '#' lines are comments, data lines are
/// "src dst" or "src dst weight". Unweighted lines default to weight 1.
struct LoadOptions {
    enum class Weights { AutoDetect, Required, Forbidden };
    Weights weights = Weights::AutoDetect;
    /// Field separator; unset means any run of spaces/tabs.
    std::optional<char> delimiter;
};

Graph load_edge_list(std::istream& in, const LoadOptions& options = {});

/// Writes rows in dense-id order with full-precision weights, so a reload
/// reproduces the graph exactly.
void write_edge_list(std::ostream& out, const Graph& g);

/// CSV "external_id,dense_id" in dense-id order.
void write_label_map(std::ostream& out, const Graph& g);

} // namespace purerank
