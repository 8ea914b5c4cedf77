#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "purerank/purerank.hpp"

namespace purerank {

/// A batch of edge upserts (insert or weight change) and removals, in
/// external-label space. Applying a delta and then its inverse restores the
/// original graph.
struct GraphDelta {
    struct Op {
        std::string src;
        std::string dst;
        /// New weight, or nullopt for removal.
        std::optional<double> weight;
    };
    std::vector<Op> ops;

    GraphDelta& upsert(std::string src, std::string dst, double weight) {
        ops.push_back({std::move(src), std::move(dst), weight});
        return *this;
    }
    GraphDelta& remove(std::string src, std::string dst) {
        ops.push_back({std::move(src), std::move(dst), std::nullopt});
        return *this;
    }
};

/// New labels introduced by the delta are appended in first-appearance
/// order, so dense ids of existing nodes are stable across deltas.
/// Removing a nonexistent edge or upserting a non-positive weight is a
/// ValidationError.
Graph apply_delta(const Graph& g, const GraphDelta& delta);

/// The delta that undoes `delta` when applied to apply_delta(g, delta).
GraphDelta inverse_delta(const Graph& g, const GraphDelta& delta);

/// Cached per-class solves keyed by class fingerprint. Entries are only
/// reusable under the same solver options and fingerprint scheme version.
struct SolverCache {
    static constexpr std::uint32_t kVersion = 1;

    struct Entry {
        std::uint64_t fingerprint = 0;
        LocalVector vec;
        /// Present for Class T entries.
        std::optional<double> theta;
    };

    std::uint32_t version = kVersion;
    SolverOptions options;
    std::vector<Entry> entries;
};

/// Fingerprints every class of the result and packages its local vectors.
SolverCache make_cache(const Graph& g, const PureRankResult& result);

/// Recomputes PureRank after a delta: classification is redone from
/// scratch, classes whose fingerprint matches a cached class reuse the
/// cached vector (marked `reused`), and only the remaining classes are
/// solved. Falls back to a full solve when the cache version or options do
/// not match. Throws ValidationError when the delta's end state is not
/// present in g_new.
PureRankResult compute_incremental(const Graph& g_new, const GraphDelta& delta,
                                   const SolverCache& cache, unsigned workers = 0);

/// Versioned JSON blob round-tripping doubles exactly.
std::string cache_to_json(const SolverCache& cache);
SolverCache cache_from_json(const std::string& text);

} // namespace purerank
