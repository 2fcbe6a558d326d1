#include "mgcs/scenario.hpp"

#include "mgcs/error.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace mgcs {

const ScenarioFeature* ScenarioSpec::find_feature(
    std::string_view feature_id) const {
    for (const auto& feature : features) {
        if (feature.def.id == feature_id) return &feature;
    }
    return nullptr;
}

void ScenarioSpec::validate() const {
    if (id.empty()) {
        throw ValidationError("scenario id must not be empty");
    }

    double sum = 0.0;
    for (Grade g : kGrades) {
        const double p = priors[g];
        if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
            throw ValidationError("scenario " + id + ": prior for grade " +
                                  format_grade(g) + " outside [0, 1]");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-6) {
        std::ostringstream msg;
        msg << "scenario " << id << ": priors sum " << sum
            << " (must be 1 within 1e-6)";
        throw ValidationError(msg.str());
    }

    std::set<std::string> seen;
    for (const auto& feature : features) {
        if (feature.def.id.empty()) {
            throw ValidationError("scenario " + id +
                                  ": feature with empty id");
        }
        if (!seen.insert(feature.def.id).second) {
            throw ValidationError("scenario " + id + ": duplicate feature id " +
                                  feature.def.id);
        }
        validate_model(feature.model, feature.def);
    }

    for (const auto& [feature_id, range] : thresholds) {
        if (!find_feature(feature_id)) {
            throw ValidationError("scenario " + id + ": threshold references " +
                                  feature_id +
                                  " which is not in the feature list");
        }
        if (range.min && range.max && *range.min > *range.max) {
            throw ValidationError("scenario " + id + ": threshold for " +
                                  feature_id + " has min > max");
        }
    }
}

std::vector<double> likelihood_vector(const ComponentRecord& record,
                                      const ScenarioSpec& scenario,
                                      Grade grade) {
    std::vector<double> likelihoods;
    likelihoods.reserve(scenario.features.size());
    for (const auto& feature : scenario.features) {
        const double value = record.value_of(feature.def.id);
        likelihoods.push_back(
            feature_likelihood(value, feature.model, grade, feature.def.id));
    }
    return likelihoods;
}

void validate_record(const ComponentRecord& record,
                     const ScenarioSpec& scenario) {
    for (const auto& feature : scenario.features) {
        const double value = record.value_of(feature.def.id);
        if (!std::isfinite(value)) {
            throw ComputeError("feature " + feature.def.id +
                               " has non-finite value");
        }
        if (feature.def.is_percentage() && (value < 0.0 || value > 100.0)) {
            throw ComputeError("feature " + feature.def.id + " value " +
                               std::to_string(value) +
                               " outside percentage range [0, 100]");
        }
    }
}

} // namespace mgcs
