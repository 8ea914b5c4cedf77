#pragma once

#include <optional>
#include <vector>

#include "purerank/classification.hpp"
#include "purerank/graph.hpp"
#include "purerank/local_importance.hpp"
#include "purerank/solver_options.hpp"

namespace purerank {

/// Global PureRank scores plus the per-class subvectors and solver
/// provenance they were assembled from. pi sums to 1; scattering the
/// subvectors by class membership reproduces pi exactly.
struct PureRankResult {
    std::vector<double> pi;
    std::vector<std::vector<double>> pi_recurrent;
    std::vector<double> pi_transient;
    std::vector<double> pi_dangling;
    std::optional<double> theta_T;
    Classification classification;
    LocalSolveSet locals;
    /// Audit copy of sum(pi).
    double total_sum = 0.0;
};

/// Local-to-global construction:
///   pi_T   = (1/N) |T|/(1+theta_T) lambda_T
///   pi_R_k = (1/N) |R_k| lambda_R_k + pi_T P_{T,R_k}
///   pi_D   = (1/N) |D|   mu_D      + pi_T P_{T,D}
/// The cross-class products are a single pass over the out-edges of T.
/// Empty classes contribute nothing.
PureRankResult assemble(const Graph& g, Classification c, LocalSolveSet locals);

/// classify -> solve every class (in parallel across classes) -> assemble.
/// Deterministic given (graph, options); worker count never changes the
/// result. Convergence failures carry the class name.
PureRankResult compute(const Graph& g, const SolverOptions& opts = {}, unsigned workers = 0);

} // namespace purerank
