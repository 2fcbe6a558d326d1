#include "mgcs/classifier.hpp"

#include "mgcs/error.hpp"

#include <cmath>
#include <string>

namespace mgcs {

double joint_likelihood(std::span<const double> likelihoods) {
    if (likelihoods.empty()) {
        throw ComputeError("joint likelihood of an empty feature list");
    }
    double smallest = likelihoods[0];
    for (const double v : likelihoods) {
        if (!std::isfinite(v) || v < 0.0) {
            throw ComputeError("likelihood entries must be finite and >= 0");
        }
        if (v < smallest) smallest = v;
    }
    if (smallest == 0.0) {
        return 0.0;
    }
    if (smallest < 1e-300) {
        double log_sum = 0.0;
        for (const double v : likelihoods) log_sum += std::log(v);
        return std::exp(log_sum);
    }
    double product = 1.0;
    for (const double v : likelihoods) product *= v;
    return product;
}

double evidence(const GradeMap<double>& joints,
                const GradeMap<double>& priors) {
    double total = 0.0;
    for (Grade g : kGrades) {
        const double joint = joints[g];
        const double prior = priors[g];
        if (!std::isfinite(joint) || joint < 0.0) {
            throw ComputeError("joint likelihood for grade " + format_grade(g) +
                               " must be finite and >= 0");
        }
        if (!std::isfinite(prior) || prior < 0.0) {
            throw ComputeError("prior for grade " + format_grade(g) +
                               " must be finite and >= 0");
        }
        total += joint * prior;
    }
    return total;
}

GradeDistribution posterior(const GradeMap<double>& joints,
                            const GradeMap<double>& priors) {
    const double normalizer = evidence(joints, priors);
    if (normalizer <= 0.0) {
        throw ComputeError("no grade supported by observations (zero evidence)");
    }
    GradeMap<double> weighted;
    for (Grade g : kGrades) {
        weighted[g] = joints[g] * priors[g];
    }
    // GradeDistribution divides by the same sum, so probs equal
    // joints[g] * priors[g] / evidence exactly.
    return GradeDistribution(weighted);
}

std::map<std::string, bool> check_thresholds(const ComponentRecord& record,
                                             const ScenarioSpec& scenario) {
    std::map<std::string, bool> report;
    for (const auto& [feature_id, range] : scenario.thresholds) {
        report[feature_id] = range.passes(record.value_of(feature_id));
    }
    return report;
}

ClassificationResult classify(const ComponentRecord& record,
                              const ScenarioSpec& scenario) {
    validate_record(record, scenario);

    GradeMap<double> joints;
    for (Grade g : kGrades) {
        const std::vector<double> likelihoods =
            likelihood_vector(record, scenario, g);
        joints[g] = joint_likelihood(likelihoods);
    }

    GradeDistribution post = posterior(joints, scenario.priors);
    const double normalizer = evidence(joints, scenario.priors);

    std::map<std::string, Grade> per_feature_best;
    for (const auto& feature : scenario.features) {
        const double value = record.value_of(feature.def.id);
        Grade best = Grade::A;
        double best_likelihood = -1.0;
        for (Grade g : kGrades) {
            const double l =
                feature_likelihood(value, feature.model, g, feature.def.id);
            if (l >= best_likelihood) { // ties resolve to the worse grade
                best_likelihood = l;
                best = g;
            }
        }
        per_feature_best[feature.def.id] = best;
    }

    const Grade final_grade = post.top_grade();
    return ClassificationResult{
        scenario.id,
        std::move(post),
        final_grade,
        joints,
        normalizer,
        check_thresholds(record, scenario),
        std::move(per_feature_best),
    };
}

std::vector<ScenarioOutcome> classify_all(
    const ComponentRecord& record, std::span<const ScenarioSpec> scenarios) {
    std::vector<ScenarioOutcome> outcomes;
    outcomes.reserve(scenarios.size());
    for (const ScenarioSpec& scenario : scenarios) {
        ScenarioOutcome outcome;
        outcome.scenario_id = scenario.id;
        try {
            outcome.result = classify(record, scenario);
        } catch (const Error& e) {
            outcome.error = e.what();
        }
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

} // namespace mgcs
