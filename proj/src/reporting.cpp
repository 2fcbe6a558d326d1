#include "mgcs/reporting.hpp"

#include "mgcs/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace mgcs {

namespace {

constexpr double kFlowCutoff = 1e-12;

std::string format_probability(double value, int precision) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
    return buffer;
}

} // namespace

std::vector<SankeyFlow> sankey_flows(
    const std::string& component_id,
    std::span<const ClassificationResult> results,
    const std::map<std::string, double>& weights) {
    double weight_sum = 0.0;
    for (const auto& [scenario_id, weight] : weights) {
        if (!std::isfinite(weight) || weight < 0.0) {
            throw ComputeError("sankey weight for scenario " + scenario_id +
                               " must be finite and >= 0");
        }
        weight_sum += weight;
    }
    if (std::abs(weight_sum - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "sankey weights sum to " << weight_sum
            << " (must be 1 within 1e-9)";
        throw ComputeError(msg.str());
    }
    for (const auto& result : results) {
        if (!weights.count(result.scenario_id)) {
            throw ComputeError("sankey weights missing scenario " +
                               result.scenario_id);
        }
    }

    std::vector<SankeyFlow> flows;
    for (const auto& result : results) {
        const double weight = weights.at(result.scenario_id);
        if (weight >= kFlowCutoff) {
            flows.push_back({component_id, result.scenario_id, weight});
        }
        for (Grade g : kGrades) {
            const double value = weight * result.posterior.prob(g);
            if (value >= kFlowCutoff) {
                flows.push_back(
                    {result.scenario_id, format_grade(g), value});
            }
        }
    }
    return flows;
}

std::int64_t ConfusionMatrix::row_sum(Grade truth) const {
    std::int64_t sum = 0;
    for (Grade g : kGrades) sum += counts_[truth][g];
    return sum;
}

ConfusionMatrix confusion_matrix(std::span<const Grade> predicted,
                                 std::span<const Grade> truth) {
    if (predicted.size() != truth.size()) {
        throw ComputeError("confusion matrix inputs differ in length: " +
                           std::to_string(predicted.size()) + " predicted vs " +
                           std::to_string(truth.size()) + " truth");
    }
    ConfusionMatrix matrix;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        matrix.add(truth[i], predicted[i]);
    }
    return matrix;
}

std::vector<ComparisonRow> comparison_table(
    std::span<const ClassificationResult> results) {
    std::vector<ComparisonRow> rows;
    rows.reserve(results.size());
    for (const auto& result : results) {
        ComparisonRow row;
        row.scenario_id = result.scenario_id;
        row.top_grade = result.final_grade;
        row.top_probability = result.posterior.prob(result.final_grade);
        for (const auto& [feature_id, passed] : result.threshold_report) {
            (void)feature_id;
            if (passed) {
                row.thresholds_passed++;
            } else {
                row.thresholds_failed++;
            }
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(),
              [](const ComparisonRow& a, const ComparisonRow& b) {
                  return a.scenario_id < b.scenario_id;
              });
    return rows;
}

nlohmann::json sankey_to_json(std::span<const SankeyFlow> flows) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& flow : flows) {
        j.push_back({{"source", flow.source},
                     {"target", flow.target},
                     {"value", flow.value}});
    }
    return j;
}

std::string confusion_to_csv(const ConfusionMatrix& matrix) {
    std::ostringstream out;
    // Rows are true grades, columns predicted grades.
    out << "truth";
    for (Grade g : kGrades) out << "," << grade_letter(g);
    out << "\n";
    for (Grade t : kGrades) {
        out << grade_letter(t);
        for (Grade p : kGrades) out << "," << matrix.count(t, p);
        out << "\n";
    }
    return out.str();
}

std::string comparison_to_csv(std::span<const ComparisonRow> rows,
                              int precision) {
    std::ostringstream out;
    out << "scenario,top_grade,top_probability,thresholds_passed,"
           "thresholds_failed\n";
    for (const auto& row : rows) {
        out << row.scenario_id << "," << grade_letter(row.top_grade) << ","
            << format_probability(row.top_probability, precision) << ","
            << row.thresholds_passed << "," << row.thresholds_failed << "\n";
    }
    return out.str();
}

std::string comparison_to_text(std::span<const ComparisonRow> rows,
                               int precision) {
    std::ostringstream out;
    out << "scenario  grade  probability  thresholds\n";
    for (const auto& row : rows) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-9s %-6c %-12s %d pass / %d fail\n",
                      row.scenario_id.c_str(), grade_letter(row.top_grade),
                      format_probability(row.top_probability, precision).c_str(),
                      row.thresholds_passed, row.thresholds_failed);
        out << line;
    }
    return out.str();
}

} // namespace mgcs
