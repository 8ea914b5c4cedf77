#include "purerank/local_importance.hpp"

#include <cmath>
#include <cstdlib>

#include "purerank/errors.hpp"
#include "src/class_matrix.hpp"
#include "src/parallel.hpp"

namespace purerank {

using detail::ClassMatrix;

std::optional<LocalVector> lambda_dangling(const Classification& c) {
    auto members = c.dangling_members();
    if (members.empty())
        return std::nullopt;
    LocalVector v;
    v.class_ref = ClassRef::dangling();
    v.values.assign(members.size(), 1.0 / static_cast<double>(members.size()));
    v.beta_star = 1.0 / static_cast<double>(members.size());
    return v;
}

LocalVector lambda_recurrent(const Graph& g, const Classification& c, int k,
                             const SolverOptions& opts) {
    opts.validate();
    auto members = c.recurrent_members(k);
    LocalVector v;
    v.class_ref = ClassRef::recurrent(k);
    if (members.size() == 1) {
        v.values = {1.0};
        return v;
    }

    const ClassMatrix m = ClassMatrix::build(g, c, v.class_ref);
    const double lazy = opts.lazy_factor;
    const std::size_t n = members.size();
    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n, 0.0);
    for (std::size_t iter = 1; iter <= opts.max_iterations; ++iter) {
        m.apply_transposed(x, next);
        double step = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = (1.0 - lazy) * next[i] + lazy * x[i];
            step += std::abs(next[i] - x[i]);
        }
        x.swap(next);
        if (step < opts.tolerance) {
            v.iterations = iter;
            v.residual = step;
            v.values = std::move(x);
            return v;
        }
        if (iter == opts.max_iterations)
            throw ConvergenceError(v.class_ref.name(), iter, step, std::move(x));
    }
    return v; // unreachable
}

std::optional<TransientSolve> lambda_transient(const Graph& g, const Classification& c,
                                               const SolverOptions& opts) {
    opts.validate();
    auto members = c.transient_members();
    if (members.empty())
        return std::nullopt;

    const ClassMatrix m = ClassMatrix::build(g, c, ClassRef::transient());
    const std::size_t n = members.size();
    const double uniform = 1.0 / static_cast<double>(n);
    std::vector<double> x(n, uniform);
    std::vector<double> next(n, 0.0);

    TransientSolve out;
    out.vec.class_ref = ClassRef::transient();
    for (std::size_t iter = 1; iter <= opts.max_iterations; ++iter) {
        m.apply_transposed(x, next);
        double mass = 0.0;
        for (double value : next)
            mass += value;
        const double refill = (1.0 - mass) * uniform;
        double step = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] += refill;
            step += std::abs(next[i] - x[i]);
        }
        x.swap(next);
        if (step < opts.tolerance) {
            out.vec.iterations = iter;
            out.vec.residual = step;
            break;
        }
        if (iter == opts.max_iterations)
            throw ConvergenceError("T", iter, step, std::move(x));
    }
    // Leakage evaluated at the returned iterate.
    m.apply_transposed(x, next);
    double mass = 0.0;
    for (double value : next)
        mass += value;
    out.theta = 1.0 - mass;
    out.vec.beta_star = out.theta / static_cast<double>(n);
    out.vec.values = std::move(x);
    return out;
}

LocalSolveSet solve_all(const Graph& g, const Classification& c, const SolverOptions& opts,
                        unsigned workers) {
    opts.validate();
    LocalSolveSet set;
    set.dangling = lambda_dangling(c);

    const int k_count = c.recurrent_class_count();
    const bool has_transient = !c.transient_members().empty();
    set.recurrent.resize(k_count);

    // Task i in [0, k_count) solves R_{i+1}; the last task solves T.
    const std::size_t tasks = static_cast<std::size_t>(k_count) + (has_transient ? 1 : 0);
    detail::parallel_tasks(tasks, workers, [&](std::size_t i) {
        if (i < static_cast<std::size_t>(k_count)) {
            set.recurrent[i] = lambda_recurrent(g, c, static_cast<int>(i), opts);
        } else {
            auto t = lambda_transient(g, c, opts);
            set.transient = std::move(t->vec);
            set.theta_T = t->theta;
        }
    });
    return set;
}

} // namespace purerank
