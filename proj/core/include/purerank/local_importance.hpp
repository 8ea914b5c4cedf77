#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "purerank/classification.hpp"
#include "purerank/graph.hpp"
#include "purerank/solver_options.hpp"

namespace purerank {

/// Local importance vector of one class: a probability vector over the
/// class members (class-local order) together with the optimal baseline
/// score beta_star and solver statistics. The damping rate is always 0.
struct LocalVector {
    ClassRef class_ref;
    std::vector<double> values;
    double beta_star = 0.0;
    double delta = 0.0;
    std::size_t iterations = 0;
    double residual = 0.0;
    /// Set when the vector was taken from an incremental cache.
    bool reused = false;
};

/// Uniform vector over Class D; returns nullopt when the class is empty.
std::optional<LocalVector> lambda_dangling(const Classification& c);

/// Stationary distribution of the class-internal row-normalized matrix,
/// by power iteration on the lazy transform (1-c)*P + c*I (same stationary
/// vector, always aperiodic). Throws ConvergenceError past max_iterations.
LocalVector lambda_recurrent(const Graph& g, const Classification& c, int k,
                             const SolverOptions& opts);

struct TransientSolve {
    LocalVector vec;
    /// theta_T = 1 - lambda_T * P_T * e: per-step importance leakage out of
    /// Class T under lambda_T.
    double theta = 0.0;
};

/// Iterates x <- x*P_T + (1 - x*P_T*e)*mu_T from the uniform start until the
/// L1 step norm drops below tolerance. Returns nullopt when T is empty.
std::optional<TransientSolve> lambda_transient(const Graph& g, const Classification& c,
                                               const SolverOptions& opts);

/// All local vectors for one classification. theta_T is present iff T is
/// nonempty.
struct LocalSolveSet {
    std::optional<LocalVector> dangling;
    std::vector<LocalVector> recurrent;
    std::optional<LocalVector> transient;
    std::optional<double> theta_T;
};

/// Runs every class solver; independent classes are dispatched to a pool of
/// `workers` threads (0 = hardware concurrency). Results do not depend on
/// the worker count.
LocalSolveSet solve_all(const Graph& g, const Classification& c, const SolverOptions& opts,
                        unsigned workers = 0);

} // namespace purerank
