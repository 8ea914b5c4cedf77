#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "purerank/classification.hpp"
#include "purerank/graph.hpp"

namespace purerank {

/// The surfer's state space V-hat = V plus one primed copy of every
/// recurrent and dangling node. From a transient node the surfer follows
/// its full normalized out-row with R/D targets redirected to their primed
/// copies; from a primed copy it jumps uniformly into T; dangling originals
/// self-absorb; recurrent originals walk their class-internal row.
/// Transitions are sampled lazily from the graph adjacency. The chain
/// borrows the graph and classification, which must outlive it.
class ExtendedChain {
public:
    ExtendedChain(const Graph& g, const Classification& c);

    std::size_t state_count() const noexcept { return fold_.size(); }
    std::size_t node_count() const noexcept { return g_->node_count(); }
    /// Folds a state onto its original node (identity on V).
    NodeId fold(std::size_t state) const { return fold_[state]; }
    bool is_primed(std::size_t state) const { return state >= node_count(); }
    bool is_transient(std::size_t state) const {
        return !is_primed(state) && c_->label(fold_[state]) == Label::Transient;
    }

    /// Uniform over the original nodes; zero mass on primed copies.
    std::size_t sample_initial(std::uint64_t& rng_state) const;
    std::size_t step(std::size_t state, std::uint64_t& rng_state) const;

    /// Full outgoing distribution of one state, for exhaustive checks and
    /// dense oracles.
    std::vector<std::pair<std::size_t, double>> row_distribution(std::size_t state) const;

    const Graph& graph() const noexcept { return *g_; }
    const Classification& classification() const noexcept { return *c_; }

private:
    const Graph* g_;
    const Classification* c_;
    std::vector<NodeId> fold_;
    /// Primed state of each original node, or -1 for transient nodes.
    std::vector<std::int64_t> primed_state_;
    /// Per-node inclusive prefix sums of out-edge weights, for sampling.
    std::vector<double> cumulative_;
    std::vector<std::size_t> cum_offsets_;
};

ExtendedChain build_extended_chain(const Graph& g, const Classification& c);

struct SurferStats {
    std::uint64_t surfers = 0;
    std::uint64_t steps_per_surfer = 0;
    std::uint64_t seed = 0;
    /// Visit counts folded onto original nodes; includes the initial state,
    /// so the counts sum to surfers * steps_per_surfer.
    std::vector<std::uint64_t> folded_counts;
    /// Completed Class-T sojourn lengths, in surfer order.
    std::vector<std::uint32_t> sojourn_lengths;
};

/// Walks `surfers` independent chains for `steps` counted states each.
/// Per-surfer RNG streams are derived from the seed by a fixed splitting
/// rule, so results are bitwise reproducible for any worker count.
SurferStats simulate(const ExtendedChain& chain, std::uint64_t surfers, std::uint64_t steps,
                     std::uint64_t seed, unsigned workers = 0);

struct SojournReport {
    std::size_t episodes = 0;
    double empirical_mean = 0.0;
    double expected_mean = 0.0;
    double relative_error = 0.0;
};

/// Compares the mean observed T-sojourn against 1/theta_T. Returns nullopt
/// when fewer than 100 completed episodes are available.
std::optional<SojournReport> sojourn_check(const SurferStats& stats, double theta_T);

} // namespace purerank
