#pragma once

#include "mgcs/classifier.hpp"
#include "mgcs/grade.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace mgcs {

// One edge of the component -> scenario -> grade flow diagram.
struct SankeyFlow {
    std::string source;
    std::string target;
    double value = 0.0;

    bool operator==(const SankeyFlow&) const = default;
};

// Flows for a component classified under several scenarios. The component
// feeds each scenario with its weight; each scenario fans out to the grade
// nodes with weight * posterior. Grade nodes are shared across scenarios.
// Flows below 1e-12 are omitted. Weights must cover every result's scenario
// and sum to 1 within 1e-9.
std::vector<SankeyFlow> sankey_flows(
    const std::string& component_id,
    std::span<const ClassificationResult> results,
    const std::map<std::string, double>& weights);

// 5x5 count matrix indexed by (true grade, predicted grade).
class ConfusionMatrix {
public:
    void add(Grade truth, Grade predicted) {
        counts_[truth][predicted]++;
        total_++;
    }

    std::int64_t count(Grade truth, Grade predicted) const {
        return counts_[truth][predicted];
    }
    std::int64_t row_sum(Grade truth) const;
    std::int64_t total() const { return total_; }

private:
    GradeMap<GradeMap<std::int64_t>> counts_;
    std::int64_t total_ = 0;
};

// Throws ComputeError when the lists differ in length.
ConfusionMatrix confusion_matrix(std::span<const Grade> predicted,
                                 std::span<const Grade> truth);

// One row of the scenario comparison summary.
struct ComparisonRow {
    std::string scenario_id;
    Grade top_grade = Grade::A;
    double top_probability = 0.0;
    int thresholds_passed = 0;
    int thresholds_failed = 0;
};

// One row per result, sorted by scenario id.
std::vector<ComparisonRow> comparison_table(
    std::span<const ClassificationResult> results);

// Exports. All byte-deterministic for identical inputs.
nlohmann::json sankey_to_json(std::span<const SankeyFlow> flows);
std::string confusion_to_csv(const ConfusionMatrix& matrix);
std::string comparison_to_csv(std::span<const ComparisonRow> rows,
                              int precision = 6);
std::string comparison_to_text(std::span<const ComparisonRow> rows,
                               int precision = 6);

} // namespace mgcs
