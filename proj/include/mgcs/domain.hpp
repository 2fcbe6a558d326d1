#pragma once

#include "mgcs/grade.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace mgcs {

// How a feature's likelihood is modeled: a Gaussian per grade for continuous
// measurements, or a value-binned table for bounded/empirical ones.
enum class FeatureKind {
    Continuous,
    BoundedTable,
};

std::string_view feature_kind_name(FeatureKind kind);
FeatureKind parse_feature_kind(std::string_view text);

struct FeatureDef {
    std::string id;   // short identifier, e.g. "F1"
    std::string name; // human label, e.g. "Residual load-bearing capacity"
    std::string unit; // free text: %, mm, W/m2K, min, ...
    FeatureKind kind = FeatureKind::Continuous;

    bool is_percentage() const { return unit == "%"; }

    bool operator==(const FeatureDef&) const = default;
};

// Observed feature values for one component, keyed by feature id.
struct ComponentRecord {
    std::string component_id;
    std::map<std::string, double> values;

    // Throws ComputeError when the feature is absent.
    double value_of(const std::string& feature_id) const;

    bool operator==(const ComponentRecord&) const = default;
};

// Optional lower/upper bound on a feature value; pass means
// min <= value (when min set) and value <= max (when max set).
struct ThresholdRange {
    std::optional<double> min;
    std::optional<double> max;

    bool passes(double value) const {
        if (min && value < *min) return false;
        if (max && value > *max) return false;
        return true;
    }

    bool operator==(const ThresholdRange&) const = default;
};

// Probability mass over the five grades. Construction normalizes, so any
// instance sums to 1 within 1e-9 and every entry is in [0, 1].
class GradeDistribution {
public:
    // Normalizes `weights` by their sum. Throws ComputeError when any weight
    // is negative or non-finite, or when all weights are zero.
    explicit GradeDistribution(const GradeMap<double>& weights);

    double prob(Grade g) const { return probs_[g]; }
    const GradeMap<double>& probs() const { return probs_; }

    // Grade attaining the maximum probability; ties go to the worse grade.
    Grade top_grade() const;

    bool operator==(const GradeDistribution&) const = default;

private:
    GradeMap<double> probs_;
};

} // namespace mgcs
