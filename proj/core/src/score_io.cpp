#include "purerank/score_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "purerank/errors.hpp"

namespace purerank {

namespace {

const char* label_letter(Label l) {
    switch (l) {
    case Label::Dangling:
        return "D";
    case Label::Transient:
        return "T";
    case Label::Recurrent:
        return "R";
    }
    return "?";
}

std::string format_score(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            std::string field = line.substr(start, i - start);
            if (!field.empty() && field.back() == '\r')
                field.pop_back();
            fields.push_back(std::move(field));
            start = i + 1;
        }
    }
    return fields;
}

double parse_double(const std::string& field, std::size_t line_no) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError("cannot parse number '" + field + "'", line_no);
    return v;
}

} // namespace

void write_scores_csv(std::ostream& out, const Graph& g, const Classification& c,
                      std::span<const double> scores) {
    if (scores.size() != g.node_count())
        throw ValidationError("score vector does not match graph");
    out << "node,score,class\n";
    for (NodeId i = 0; i < g.node_count(); ++i)
        out << g.label(i) << ',' << format_score(scores[i]) << ',' << label_letter(c.label(i))
            << '\n';
}

ScoreRows read_scores_csv(std::istream& in) {
    ScoreRows rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r")
            continue;
        auto fields = split_csv(line);
        if (line_no == 1 && !fields.empty() && fields[0] == "node")
            continue;
        if (fields.size() < 2)
            throw ParseError("expected 'node,score[,class]'", line_no);
        rows.nodes.push_back(fields[0]);
        rows.scores.push_back(parse_double(fields[1], line_no));
    }
    if (in.bad())
        throw IoError("read failure on score CSV");
    if (rows.nodes.empty())
        throw ValidationError("score CSV contains no rows");
    return rows;
}

void write_classification_csv(std::ostream& out, const Graph& g, const Classification& c) {
    out << "node,label,class_index\n";
    for (NodeId i = 0; i < g.node_count(); ++i) {
        int index = c.label(i) == Label::Recurrent ? c.recurrent_class(i) + 1 : 0;
        out << g.label(i) << ',' << label_letter(c.label(i)) << ',' << index << '\n';
    }
}

ClassificationRows read_classification_csv(std::istream& in) {
    ClassificationRows rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r")
            continue;
        auto fields = split_csv(line);
        if (line_no == 1 && !fields.empty() && fields[0] == "node")
            continue;
        if (fields.size() < 3)
            throw ParseError("expected 'node,label,class_index'", line_no);
        rows.nodes.push_back(fields[0]);
        if (fields[1] == "D")
            rows.labels.push_back(Label::Dangling);
        else if (fields[1] == "T")
            rows.labels.push_back(Label::Transient);
        else if (fields[1] == "R")
            rows.labels.push_back(Label::Recurrent);
        else
            throw ParseError("unknown class label '" + fields[1] + "'", line_no);
        rows.class_index.push_back(static_cast<int>(parse_double(fields[2], line_no)));
    }
    if (in.bad())
        throw IoError("read failure on classification CSV");
    if (rows.nodes.empty())
        throw ValidationError("classification CSV contains no rows");
    return rows;
}

void write_summary(std::ostream& out, const ClassificationSummary& s) {
    out << "Total links      : " << s.total_links << '\n';
    out << "Total nodes      : " << s.total_nodes << '\n';
    out << "Nodes in Class R : " << s.nodes_recurrent << '\n';
    out << "Nodes in Class T : " << s.nodes_transient << '\n';
    out << "Nodes in Class D : " << s.nodes_dangling << '\n';
    out << "Recurrent class sizes (size: count):\n";
    if (s.recurrent_size_histogram.empty())
        out << "  (none)\n";
    for (const auto& [size, count] : s.recurrent_size_histogram)
        out << "  " << size << ": " << count << '\n';
}

namespace {

nlohmann::json scores_json(const Graph& g, const Classification& c,
                           std::span<const double> scores) {
    auto arr = nlohmann::json::array();
    for (NodeId i = 0; i < g.node_count(); ++i)
        arr.push_back({{"node", g.label(i)}, {"score", scores[i]},
                       {"class", label_letter(c.label(i))}});
    return arr;
}

nlohmann::json breakdown_json(const ClassBreakdown& b) {
    auto opt = [](const std::optional<double>& v) {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    return {{"top_k_pct", {{"R", b.top_k_pct_recurrent},
                           {"T", b.top_k_pct_transient},
                           {"D", b.top_k_pct_dangling}}},
            {"mean_score",
             {{"R", opt(b.mean_recurrent)}, {"T", opt(b.mean_transient)},
              {"D", opt(b.mean_dangling)}}}};
}

} // namespace

std::string purerank_result_json(const Graph& g, const PureRankResult& result,
                                 double wall_time_ms) {
    nlohmann::json j;
    j["measure"] = "purerank";
    j["scores"] = scores_json(g, result.classification, result.pi);
    j["theta_T"] = result.theta_T ? nlohmann::json(*result.theta_T) : nlohmann::json(nullptr);
    j["total_sum"] = result.total_sum;
    auto classes = nlohmann::json::array();
    auto push = [&](const LocalVector& v) {
        classes.push_back({{"class", v.class_ref.name()},
                           {"size", v.values.size()},
                           {"iterations", v.iterations},
                           {"residual", v.residual},
                           {"beta_star", v.beta_star},
                           {"reused", v.reused}});
    };
    for (const auto& v : result.locals.recurrent)
        push(v);
    if (result.locals.transient)
        push(*result.locals.transient);
    if (result.locals.dangling)
        push(*result.locals.dangling);
    j["classes"] = std::move(classes);
    j["metadata"] = {{"wall_time_ms", wall_time_ms}};
    return j.dump(2);
}

std::string pagerank_result_json(const Graph& g, const Classification& c,
                                 const PageRankResult& result, double wall_time_ms) {
    nlohmann::json j;
    j["measure"] = "pagerank";
    j["damping"] = result.damping;
    j["iterations"] = result.iterations;
    j["residual"] = result.residual;
    j["scores"] = scores_json(g, c, result.gamma);
    j["metadata"] = {{"wall_time_ms", wall_time_ms}};
    return j.dump(2);
}

std::string comparison_report_json(const ComparisonReport& r) {
    nlohmann::json j;
    j["metadata"] = {{"k", r.k},
                     {"graph", r.graph_id},
                     {"measure_a", r.measure_a},
                     {"measure_b", r.measure_b},
                     {"tie_breaking", "descending score, ascending node id"},
                     {"tau_variant", "tau-b"}};
    j["top_k_overlap_pct"] = r.top_k_overlap_pct;
    j["kendall_tau"] = r.kendall ? nlohmann::json(*r.kendall) : nlohmann::json(nullptr);
    j["pearson_r"] = r.pearson_r ? nlohmann::json(*r.pearson_r) : nlohmann::json(nullptr);
    j["class_breakdown"] = {{"a", breakdown_json(r.breakdown_a)},
                            {"b", breakdown_json(r.breakdown_b)}};
    return j.dump(2);
}

} // namespace purerank
