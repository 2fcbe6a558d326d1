#pragma once

#include "mgcs/domain.hpp"
#include "mgcs/grade.hpp"
#include "mgcs/likelihood.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mgcs {

// A feature as the scenario sees it: definition plus its likelihood model.
struct ScenarioFeature {
    FeatureDef def;
    LikelihoodModel model;

    bool operator==(const ScenarioFeature&) const = default;
};

// A named usage scenario: scenario-conditioned priors, the feature subset it
// cares about (ordered), and pass/fail thresholds on selected features.
struct ScenarioSpec {
    std::string id;    // e.g. "U1"
    std::string label; // e.g. "Commercial exterior wall"
    GradeMap<double> priors;
    std::vector<ScenarioFeature> features;
    std::map<std::string, ThresholdRange> thresholds; // feature id -> range

    const ScenarioFeature* find_feature(std::string_view feature_id) const;

    // Full invariant check: priors in [0,1] summing to 1 within 1e-6, unique
    // feature ids, models valid for their kinds, thresholds referencing
    // known features. Throws ValidationError.
    void validate() const;

    bool operator==(const ScenarioSpec&) const = default;
};

// One likelihood per scenario feature, in scenario feature order.
// Throws ComputeError naming the feature id when the record lacks a value.
std::vector<double> likelihood_vector(const ComponentRecord& record,
                                      const ScenarioSpec& scenario,
                                      Grade grade);

// Record-level checks against a scenario: every scenario feature present,
// values finite, percentage-unit values within [0, 100].
void validate_record(const ComponentRecord& record,
                     const ScenarioSpec& scenario);

} // namespace mgcs
