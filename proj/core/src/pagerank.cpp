#include "purerank/pagerank.hpp"

#include <cmath>

#include "purerank/errors.hpp"

namespace purerank {

PageRankResult pagerank(const Graph& g, double damping, const SolverOptions& opts) {
    opts.validate();
    if (!(damping > 0.0) || !(damping < 1.0))
        throw ValidationError("damping factor must lie in (0, 1)");

    const std::size_t n = g.node_count();
    const double uniform = 1.0 / static_cast<double>(n);
    std::vector<double> x(n, uniform);
    std::vector<double> next(n, 0.0);

    PageRankResult r;
    r.damping = damping;
    for (std::size_t iter = 1; iter <= opts.max_iterations; ++iter) {
        double dangling_mass = 0.0;
        for (NodeId i = 0; i < n; ++i)
            if (g.dangling(i))
                dangling_mass += x[i];
        const double teleport = damping * dangling_mass * uniform + (1.0 - damping) * uniform;
        for (NodeId j = 0; j < n; ++j) {
            auto sources = g.in_sources(j);
            auto weights = g.in_weights(j);
            double acc = 0.0;
            for (std::size_t e = 0; e < sources.size(); ++e)
                acc += x[sources[e]] * (weights[e] / g.out_weight(sources[e]));
            next[j] = damping * acc + teleport;
        }
        double step = 0.0;
        for (NodeId j = 0; j < n; ++j)
            step += std::abs(next[j] - x[j]);
        x.swap(next);
        if (step < opts.tolerance) {
            r.iterations = iter;
            r.residual = step;
            r.gamma = std::move(x);
            return r;
        }
        if (iter == opts.max_iterations)
            throw ConvergenceError("pagerank(d=" + std::to_string(damping) + ")", iter, step,
                                   std::move(x));
    }
    return r; // unreachable
}

} // namespace purerank
