#include "purerank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "purerank/errors.hpp"

namespace purerank {

namespace {

void check_pair(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw ValidationError("score vectors must have equal length");
}

// Indices of the k best scores, descending score with ascending-id ties.
std::vector<std::size_t> top_k_indices(std::span<const double> scores, std::size_t k) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::partial_sort(order.begin(), order.begin() + k, order.end(),
                      [&](std::size_t x, std::size_t y) {
                          if (scores[x] != scores[y])
                              return scores[x] > scores[y];
                          return x < y;
                      });
    order.resize(k);
    return order;
}

// Merge sort over the y-sequence counting strict inversions.
std::uint64_t count_inversions(std::vector<double>& values, std::vector<double>& scratch,
                               std::size_t lo, std::size_t hi) {
    if (hi - lo < 2)
        return 0;
    std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t count =
        count_inversions(values, scratch, lo, mid) + count_inversions(values, scratch, mid, hi);
    std::size_t i = lo, j = mid, out = lo;
    while (i < mid && j < hi) {
        if (values[j] < values[i]) { // strict: ties are not discordant
            count += mid - i;
            scratch[out++] = values[j++];
        } else {
            scratch[out++] = values[i++];
        }
    }
    while (i < mid)
        scratch[out++] = values[i++];
    while (j < hi)
        scratch[out++] = values[j++];
    std::copy(scratch.begin() + lo, scratch.begin() + hi, values.begin() + lo);
    return count;
}

std::uint64_t tie_pairs(std::vector<double> sorted_values) {
    std::uint64_t pairs = 0;
    std::size_t i = 0;
    while (i < sorted_values.size()) {
        std::size_t j = i + 1;
        while (j < sorted_values.size() && sorted_values[j] == sorted_values[i])
            ++j;
        std::uint64_t run = j - i;
        pairs += run * (run - 1) / 2;
        i = j;
    }
    return pairs;
}

} // namespace

double top_k_overlap(std::span<const double> a, std::span<const double> b, std::size_t k) {
    check_pair(a, b);
    if (k == 0 || k > a.size())
        throw ValidationError("k must lie in [1, N]");
    auto ta = top_k_indices(a, k);
    auto tb = top_k_indices(b, k);
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    std::vector<std::size_t> common;
    std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(), std::back_inserter(common));
    return 100.0 * static_cast<double>(common.size()) / static_cast<double>(k);
}

std::optional<double> kendall_tau(std::span<const double> a, std::span<const double> b) {
    check_pair(a, b);
    const std::size_t n = a.size();
    if (n < 2)
        throw ValidationError("kendall_tau requires N >= 2");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (a[x] != a[y])
            return a[x] < a[y];
        return b[x] < b[y];
    });

    const std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    // n1: pairs tied in a; n3: pairs tied in both (Knight's method).
    std::uint64_t n1 = 0, n3 = 0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && a[order[j]] == a[order[i]])
            ++j;
        std::uint64_t run = j - i;
        n1 += run * (run - 1) / 2;
        std::size_t u = i;
        while (u < j) {
            std::size_t v = u + 1;
            while (v < j && b[order[v]] == b[order[u]])
                ++v;
            std::uint64_t both = v - u;
            n3 += both * (both - 1) / 2;
            u = v;
        }
        i = j;
    }

    std::vector<double> y(n);
    for (std::size_t p = 0; p < n; ++p)
        y[p] = b[order[p]];
    std::uint64_t n2 = 0;
    {
        std::vector<double> sorted_y = y;
        std::sort(sorted_y.begin(), sorted_y.end());
        n2 = tie_pairs(std::move(sorted_y));
    }
    if (n1 == n0 || n2 == n0)
        return std::nullopt; // zero variance in a or b

    std::vector<double> scratch(n);
    std::uint64_t discordant = count_inversions(y, scratch, 0, n);

    const double numerator = static_cast<double>(n0) - static_cast<double>(n1) -
                             static_cast<double>(n2) + static_cast<double>(n3) -
                             2.0 * static_cast<double>(discordant);
    const double denominator = std::sqrt(static_cast<double>(n0 - n1)) *
                               std::sqrt(static_cast<double>(n0 - n2));
    return numerator / denominator;
}

std::optional<double> pearson(std::span<const double> a, std::span<const double> b) {
    check_pair(a, b);
    const std::size_t n = a.size();
    if (n < 2)
        throw ValidationError("pearson requires N >= 2");
    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_a += a[i];
        mean_b += b[i];
    }
    mean_a /= static_cast<double>(n);
    mean_b /= static_cast<double>(n);
    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = a[i] - mean_a;
        const double db = b[i] - mean_b;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a == 0.0 || var_b == 0.0)
        return std::nullopt;
    return cov / std::sqrt(var_a) / std::sqrt(var_b);
}

ClassBreakdown class_breakdown(std::span<const double> scores, std::span<const Label> labels,
                               std::size_t k) {
    if (scores.size() != labels.size())
        throw ValidationError("scores and labels must have equal length");
    if (k == 0 || k > scores.size())
        throw ValidationError("k must lie in [1, N]");
    ClassBreakdown out;
    out.k = k;
    std::size_t top_counts[3] = {0, 0, 0};
    for (std::size_t idx : top_k_indices(scores, k))
        top_counts[static_cast<std::size_t>(labels[idx])] += 1;
    double sums[3] = {0.0, 0.0, 0.0};
    std::size_t sizes[3] = {0, 0, 0};
    for (std::size_t i = 0; i < scores.size(); ++i) {
        sums[static_cast<std::size_t>(labels[i])] += scores[i];
        sizes[static_cast<std::size_t>(labels[i])] += 1;
    }
    auto pct = [&](Label l) {
        return 100.0 * static_cast<double>(top_counts[static_cast<std::size_t>(l)]) /
               static_cast<double>(k);
    };
    auto mean = [&](Label l) -> std::optional<double> {
        std::size_t size = sizes[static_cast<std::size_t>(l)];
        if (size == 0)
            return std::nullopt;
        return sums[static_cast<std::size_t>(l)] / static_cast<double>(size);
    };
    out.top_k_pct_recurrent = pct(Label::Recurrent);
    out.top_k_pct_transient = pct(Label::Transient);
    out.top_k_pct_dangling = pct(Label::Dangling);
    out.mean_recurrent = mean(Label::Recurrent);
    out.mean_transient = mean(Label::Transient);
    out.mean_dangling = mean(Label::Dangling);
    return out;
}

ComparisonReport make_comparison_report(std::span<const double> a, std::span<const double> b,
                                        std::span<const Label> labels, std::size_t k,
                                        std::string graph_id, std::string measure_a,
                                        std::string measure_b) {
    ComparisonReport r;
    r.k = k;
    r.graph_id = std::move(graph_id);
    r.measure_a = std::move(measure_a);
    r.measure_b = std::move(measure_b);
    r.top_k_overlap_pct = top_k_overlap(a, b, k);
    r.kendall = kendall_tau(a, b);
    r.pearson_r = pearson(a, b);
    r.breakdown_a = class_breakdown(a, labels, k);
    r.breakdown_b = class_breakdown(b, labels, k);
    return r;
}

} // namespace purerank
