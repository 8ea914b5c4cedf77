#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "purerank/classification.hpp"

namespace purerank {

/// |topk(a) ∩ topk(b)| / k * 100, where topk selects by descending score
/// with ties broken by ascending node id. Requires 1 <= k <= N.
double top_k_overlap(std::span<const double> a, std::span<const double> b, std::size_t k);

/// Tie-corrected tau-b over all pairs via O(N log N) merge-sort counting.
/// Returns nullopt when either vector has zero variance.
std::optional<double> kendall_tau(std::span<const double> a, std::span<const double> b);

/// Product-moment correlation, two-pass. Returns nullopt on zero variance.
std::optional<double> pearson(std::span<const double> a, std::span<const double> b);

/// Top-k composition and per-class mean score, with recurrent classes
/// aggregated into one bucket. Means are absent for empty classes.
struct ClassBreakdown {
    std::size_t k = 0;
    double top_k_pct_recurrent = 0.0;
    double top_k_pct_transient = 0.0;
    double top_k_pct_dangling = 0.0;
    std::optional<double> mean_recurrent;
    std::optional<double> mean_transient;
    std::optional<double> mean_dangling;
};

ClassBreakdown class_breakdown(std::span<const double> scores, std::span<const Label> labels,
                               std::size_t k);

struct ComparisonReport {
    std::size_t k = 0;
    std::string graph_id;
    std::string measure_a;
    std::string measure_b;
    double top_k_overlap_pct = 0.0;
    std::optional<double> kendall;
    std::optional<double> pearson_r;
    ClassBreakdown breakdown_a;
    ClassBreakdown breakdown_b;
};

ComparisonReport make_comparison_report(std::span<const double> a, std::span<const double> b,
                                        std::span<const Label> labels, std::size_t k,
                                        std::string graph_id = {}, std::string measure_a = "a",
                                        std::string measure_b = "b");

} // namespace purerank
