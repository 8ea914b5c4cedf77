#include "purerank/random_surfer.hpp"

#include <algorithm>

#include "purerank/errors.hpp"
#include "src/parallel.hpp"

namespace purerank {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t next_u64(std::uint64_t& state) {
    state += kGolden;
    return mix64(state);
}

double next_double(std::uint64_t& state) {
    return static_cast<double>(next_u64(state) >> 11) * 0x1.0p-53;
}

// Fixed per-surfer stream derivation.
std::uint64_t stream_state(std::uint64_t seed, std::uint64_t surfer) {
    return mix64(seed + (surfer + 1) * kGolden);
}

} // namespace

ExtendedChain::ExtendedChain(const Graph& g, const Classification& c) : g_(&g), c_(&c) {
    if (c.node_count() != g.node_count())
        throw ValidationError("classification does not match graph");
    const std::size_t n = g.node_count();
    fold_.reserve(n + c.dangling_members().size());
    for (NodeId i = 0; i < n; ++i)
        fold_.push_back(i);
    primed_state_.assign(n, -1);
    for (int k = 0; k < c.recurrent_class_count(); ++k)
        for (NodeId v : c.recurrent_members(k)) {
            primed_state_[v] = static_cast<std::int64_t>(fold_.size());
            fold_.push_back(v);
        }
    for (NodeId v : c.dangling_members()) {
        primed_state_[v] = static_cast<std::int64_t>(fold_.size());
        fold_.push_back(v);
    }

    cumulative_.reserve(g.edge_count());
    cum_offsets_.reserve(n + 1);
    cum_offsets_.push_back(0);
    for (NodeId i = 0; i < n; ++i) {
        double acc = 0.0;
        for (double w : g.out_weights(i)) {
            acc += w;
            cumulative_.push_back(acc);
        }
        cum_offsets_.push_back(cumulative_.size());
    }
}

std::size_t ExtendedChain::sample_initial(std::uint64_t& rng_state) const {
    return static_cast<std::size_t>(next_u64(rng_state) % node_count());
}

std::size_t ExtendedChain::step(std::size_t state, std::uint64_t& rng_state) const {
    const std::size_t n = node_count();
    if (state >= n) {
        auto t_members = c_->transient_members();
        if (t_members.empty())
            return state;
        return t_members[static_cast<std::size_t>(next_u64(rng_state) % t_members.size())];
    }
    NodeId i = static_cast<NodeId>(state);
    switch (c_->label(i)) {
    case Label::Dangling:
        return state;
    case Label::Recurrent:
    case Label::Transient: {
        const std::size_t begin = cum_offsets_[i];
        const std::size_t end = cum_offsets_[i + 1];
        const double u = next_double(rng_state) * g_->out_weight(i);
        auto it = std::upper_bound(cumulative_.begin() + begin, cumulative_.begin() + end, u);
        std::size_t e = std::min(static_cast<std::size_t>(it - cumulative_.begin()), end - 1);
        NodeId target = g_->out_targets(i)[e - begin];
        if (c_->label(i) == Label::Transient && c_->label(target) != Label::Transient)
            return static_cast<std::size_t>(primed_state_[target]);
        return target;
    }
    }
    return state;
}

std::vector<std::pair<std::size_t, double>>
ExtendedChain::row_distribution(std::size_t state) const {
    std::vector<std::pair<std::size_t, double>> row;
    const std::size_t n = node_count();
    if (state >= n) {
        auto t_members = c_->transient_members();
        if (t_members.empty()) {
            row.emplace_back(state, 1.0); // unreachable copies self-absorb
            return row;
        }
        const double p = 1.0 / static_cast<double>(t_members.size());
        for (NodeId v : t_members)
            row.emplace_back(v, p);
        return row;
    }
    NodeId i = static_cast<NodeId>(state);
    if (c_->label(i) == Label::Dangling) {
        row.emplace_back(state, 1.0);
        return row;
    }
    auto nr = g_->normalized_row(i);
    for (std::size_t e = 0; e < nr.size(); ++e) {
        NodeId target = nr.target(e);
        if (c_->label(i) == Label::Transient && c_->label(target) != Label::Transient)
            row.emplace_back(static_cast<std::size_t>(primed_state_[target]), nr.probability(e));
        else
            row.emplace_back(target, nr.probability(e));
    }
    return row;
}

ExtendedChain build_extended_chain(const Graph& g, const Classification& c) {
    return ExtendedChain(g, c);
}

SurferStats simulate(const ExtendedChain& chain, std::uint64_t surfers, std::uint64_t steps,
                     std::uint64_t seed, unsigned workers) {
    if (surfers < 1 || steps < 1)
        throw ValidationError("simulate requires surfers >= 1 and steps >= 1");
    SurferStats stats;
    stats.surfers = surfers;
    stats.steps_per_surfer = steps;
    stats.seed = seed;
    stats.folded_counts.assign(chain.node_count(), 0);

    const unsigned pool = detail::resolve_workers(workers);
    const std::uint64_t chunk = (surfers + pool - 1) / pool;
    const std::size_t chunks = static_cast<std::size_t>((surfers + chunk - 1) / chunk);

    std::vector<std::vector<std::uint64_t>> counts(chunks);
    std::vector<std::vector<std::uint32_t>> sojourns(chunks);
    detail::parallel_tasks(chunks, pool, [&](std::size_t ci) {
        auto& local_counts = counts[ci];
        local_counts.assign(chain.node_count(), 0);
        auto& local_sojourns = sojourns[ci];
        const std::uint64_t begin = ci * chunk;
        const std::uint64_t end = std::min(surfers, begin + chunk);
        for (std::uint64_t s = begin; s < end; ++s) {
            std::uint64_t rng = stream_state(seed, s);
            std::size_t state = chain.sample_initial(rng);
            std::uint32_t run = 0;
            for (std::uint64_t step_no = 0; step_no < steps; ++step_no) {
                local_counts[chain.fold(state)] += 1;
                if (chain.is_transient(state)) {
                    ++run;
                } else if (run > 0) {
                    // A sojourn in T always ends on a primed copy.
                    local_sojourns.push_back(run);
                    run = 0;
                }
                if (step_no + 1 < steps)
                    state = chain.step(state, rng);
            }
        }
    });
    // Integer merges in chunk order keep the result independent of the
    // worker count and scheduling.
    for (std::size_t ci = 0; ci < chunks; ++ci) {
        for (std::size_t i = 0; i < stats.folded_counts.size(); ++i)
            stats.folded_counts[i] += counts[ci][i];
        stats.sojourn_lengths.insert(stats.sojourn_lengths.end(), sojourns[ci].begin(),
                                     sojourns[ci].end());
    }
    return stats;
}

std::optional<SojournReport> sojourn_check(const SurferStats& stats, double theta_T) {
    if (stats.sojourn_lengths.size() < 100)
        return std::nullopt;
    SojournReport r;
    r.episodes = stats.sojourn_lengths.size();
    double sum = 0.0;
    for (std::uint32_t len : stats.sojourn_lengths)
        sum += static_cast<double>(len);
    r.empirical_mean = sum / static_cast<double>(r.episodes);
    r.expected_mean = 1.0 / theta_T;
    r.relative_error = std::abs(r.empirical_mean - r.expected_mean) / r.expected_mean;
    return r;
}

} // namespace purerank
