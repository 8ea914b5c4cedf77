#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "purerank/classification.hpp"
#include "purerank/graph.hpp"
#include "purerank/metrics.hpp"
#include "purerank/pagerank.hpp"
#include "purerank/purerank.hpp"

namespace purerank {

/// CSV "node,score,class" in dense-id order, full-precision scores,
/// external node labels.
void write_scores_csv(std::ostream& out, const Graph& g, const Classification& c,
                      std::span<const double> scores);

struct ScoreRows {
    std::vector<std::string> nodes;
    std::vector<double> scores;
};

ScoreRows read_scores_csv(std::istream& in);

/// CSV "node,label,class_index": label is R/T/D; class_index is the 1-based
/// recurrent class for R rows and 0 otherwise.
void write_classification_csv(std::ostream& out, const Graph& g, const Classification& c);

struct ClassificationRows {
    std::vector<std::string> nodes;
    std::vector<Label> labels;
    std::vector<int> class_index;
};

ClassificationRows read_classification_csv(std::istream& in);

/// Human-readable counts in the standard summary-table shape.
void write_summary(std::ostream& out, const ClassificationSummary& summary);

/// JSON score document with solver metadata (theta_T, per-class iterations,
/// wall time). Wall time is the only field that varies between identical
/// runs.
std::string purerank_result_json(const Graph& g, const PureRankResult& result,
                                 double wall_time_ms);
std::string pagerank_result_json(const Graph& g, const Classification& c,
                                 const PageRankResult& result, double wall_time_ms);

std::string comparison_report_json(const ComparisonReport& report);

} // namespace purerank
