#pragma once

#include <cstddef>
#include <vector>

#include "purerank/graph.hpp"
#include "purerank/solver_options.hpp"

namespace purerank {

struct PageRankResult {
    std::vector<double> gamma;
    double damping = 0.0;
    std::size_t iterations = 0;
    double residual = 0.0;
};

/// Power iteration on the Google matrix applied implicitly:
///   x <- d * (x P + (dangling mass of x) mu_V) + (1 - d) mu_V
/// starting from the uniform vector and stopping when the L1 step norm
/// drops below tolerance. Requires 0 < damping < 1.
PageRankResult pagerank(const Graph& g, double damping, const SolverOptions& opts = {});

} // namespace purerank
