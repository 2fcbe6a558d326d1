#pragma once

#include "mgcs/domain.hpp"
#include "mgcs/grade.hpp"
#include "mgcs/scenario.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mgcs {

// Full output of grading one component under one scenario.
struct ClassificationResult {
    std::string scenario_id;
    GradeDistribution posterior;
    Grade final_grade; // argmax of the posterior, worse grade wins ties
    GradeMap<double> joints;    // P(F | G, U) per grade
    double evidence = 0.0;      // P(F | U) = sum_G joints[G] * prior[G]
    std::map<std::string, bool> threshold_report;   // feature id -> pass
    std::map<std::string, Grade> per_feature_best;  // feature id -> argmax_G
};

// Product of per-feature likelihoods. Computed in log space when any nonzero
// factor drops below 1e-300; direct multiplication otherwise.
// Throws ComputeError on an empty list or a negative/non-finite entry.
double joint_likelihood(std::span<const double> likelihoods);

// P(F | U) = sum_G joints[G] * priors[G]. Throws ComputeError on negative
// or non-finite input.
double evidence(const GradeMap<double>& joints, const GradeMap<double>& priors);

// Normalized posterior probs[G] = joints[G] * priors[G] / evidence.
// Zero evidence means no grade is supported by the observations: ComputeError.
GradeDistribution posterior(const GradeMap<double>& joints,
                            const GradeMap<double>& priors);

// Pass/fail per thresholded feature. Throws ComputeError naming any feature
// the record is missing.
std::map<std::string, bool> check_thresholds(const ComponentRecord& record,
                                             const ScenarioSpec& scenario);

// The full pipeline: likelihood vectors per grade, joints, evidence,
// posterior, final grade, threshold report, per-feature best grades.
ClassificationResult classify(const ComponentRecord& record,
                              const ScenarioSpec& scenario);

// Result of grading under one scenario of a batch; failures are isolated
// per scenario instead of aborting the whole run.
struct ScenarioOutcome {
    std::string scenario_id;
    std::optional<ClassificationResult> result;
    std::string error; // empty on success

    bool ok() const { return result.has_value(); }
};

// One outcome per scenario, scenario order preserved.
std::vector<ScenarioOutcome> classify_all(
    const ComponentRecord& record, std::span<const ScenarioSpec> scenarios);

} // namespace mgcs
