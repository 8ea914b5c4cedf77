#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "purerank/classification.hpp"
#include "purerank/graph.hpp"

namespace purerank::detail {

/// The class-internal block P_S of the normalized matrix, stored grouped by
/// target so that the row-vector product y = x * P_S is a sequential gather:
/// y[j] = sum over in-edges (i -> j, both in S) of x[i] * p_{i,j}.
class ClassMatrix {
public:
    static ClassMatrix build(const Graph& g, const Classification& c, ClassRef cls) {
        ClassMatrix m;
        auto members = c.members(cls);
        m.target_offsets_.reserve(members.size() + 1);
        m.target_offsets_.push_back(0);
        for (NodeId v : members) {
            auto sources = g.in_sources(v);
            auto weights = g.in_weights(v);
            for (std::size_t e = 0; e < sources.size(); ++e) {
                NodeId u = sources[e];
                if (c.label(u) != cls.kind)
                    continue;
                if (cls.kind == Label::Recurrent && c.recurrent_class(u) != cls.index)
                    continue;
                m.sources_.push_back(c.local_index(u));
                m.probs_.push_back(weights[e] / g.out_weight(u));
            }
            m.target_offsets_.push_back(m.sources_.size());
        }
        return m;
    }

    std::size_t size() const noexcept { return target_offsets_.size() - 1; }

    /// out[j] = sum_i x[i] * p_{i,j}; out is overwritten.
    void apply_transposed(std::span<const double> x, std::span<double> out) const {
        for (std::size_t j = 0; j < size(); ++j) {
            double acc = 0.0;
            for (std::size_t e = target_offsets_[j]; e < target_offsets_[j + 1]; ++e)
                acc += x[sources_[e]] * probs_[e];
            out[j] = acc;
        }
    }

private:
    std::vector<std::size_t> target_offsets_;
    std::vector<std::size_t> sources_;
    std::vector<double> probs_;
};

} // namespace purerank::detail
