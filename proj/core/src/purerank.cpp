#include "purerank/purerank.hpp"

#include "purerank/errors.hpp"

namespace purerank {

PureRankResult assemble(const Graph& g, Classification c, LocalSolveSet locals) {
    const std::size_t n = g.node_count();
    if (c.node_count() != n)
        throw ValidationError("classification does not match graph");

    const auto check = [&](const std::optional<LocalVector>& v, std::span<const NodeId> members,
                           const char* what) {
        if (members.empty())
            return;
        if (!v)
            throw ValidationError(std::string("missing local vector for class ") + what);
        if (v->values.size() != members.size())
            throw ValidationError(std::string("local vector size mismatch for class ") + what);
    };
    check(locals.dangling, c.dangling_members(), "D");
    check(locals.transient, c.transient_members(), "T");
    if (static_cast<int>(locals.recurrent.size()) != c.recurrent_class_count())
        throw ValidationError("missing local vectors for recurrent classes");
    for (int k = 0; k < c.recurrent_class_count(); ++k)
        if (locals.recurrent[k].values.size() != c.recurrent_members(k).size())
            throw ValidationError("local vector size mismatch for class " +
                                  ClassRef::recurrent(k).name());
    if (!c.transient_members().empty() && !locals.theta_T)
        throw ValidationError("theta_T required when Class T is nonempty");

    PureRankResult r;
    r.pi.assign(n, 0.0);
    const double inv_n = 1.0 / static_cast<double>(n);

    for (NodeId v : c.dangling_members())
        r.pi[v] = inv_n;
    for (int k = 0; k < c.recurrent_class_count(); ++k) {
        auto members = c.recurrent_members(k);
        const double scale = inv_n * static_cast<double>(members.size());
        const auto& lambda = locals.recurrent[k].values;
        for (std::size_t i = 0; i < members.size(); ++i)
            r.pi[members[i]] = scale * lambda[i];
    }

    auto t_members = c.transient_members();
    if (!t_members.empty()) {
        const double theta = *locals.theta_T;
        const double scale = inv_n * static_cast<double>(t_members.size()) / (1.0 + theta);
        const auto& lambda = locals.transient->values;
        r.pi_transient.resize(t_members.size());
        for (std::size_t i = 0; i < t_members.size(); ++i) {
            r.pi_transient[i] = scale * lambda[i];
            r.pi[t_members[i]] = r.pi_transient[i];
        }
        // Importance leaking out of T lands on its R and D targets.
        for (std::size_t i = 0; i < t_members.size(); ++i) {
            NodeId v = t_members[i];
            const double inv_out = 1.0 / g.out_weight(v);
            auto targets = g.out_targets(v);
            auto weights = g.out_weights(v);
            for (std::size_t e = 0; e < targets.size(); ++e) {
                NodeId t = targets[e];
                if (c.label(t) == Label::Transient)
                    continue;
                r.pi[t] += r.pi_transient[i] * (weights[e] * inv_out);
            }
        }
        r.theta_T = theta;
    }

    r.pi_dangling.resize(c.dangling_members().size());
    for (std::size_t i = 0; i < r.pi_dangling.size(); ++i)
        r.pi_dangling[i] = r.pi[c.dangling_members()[i]];
    r.pi_recurrent.resize(c.recurrent_class_count());
    for (int k = 0; k < c.recurrent_class_count(); ++k) {
        auto members = c.recurrent_members(k);
        r.pi_recurrent[k].resize(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            r.pi_recurrent[k][i] = r.pi[members[i]];
    }

    for (double value : r.pi)
        r.total_sum += value;
    r.classification = std::move(c);
    r.locals = std::move(locals);
    return r;
}

PureRankResult compute(const Graph& g, const SolverOptions& opts, unsigned workers) {
    Classification c = classify(g);
    LocalSolveSet locals = solve_all(g, c, opts, workers);
    return assemble(g, std::move(c), std::move(locals));
}

} // namespace purerank
