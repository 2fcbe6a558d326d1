#include "mgcs/domain.hpp"

#include "mgcs/error.hpp"

#include <cmath>

namespace mgcs {

std::string_view feature_kind_name(FeatureKind kind) {
    switch (kind) {
    case FeatureKind::Continuous:
        return "continuous";
    case FeatureKind::BoundedTable:
        return "bounded_table";
    }
    return "continuous";
}

FeatureKind parse_feature_kind(std::string_view text) {
    if (text == "continuous") return FeatureKind::Continuous;
    if (text == "bounded_table") return FeatureKind::BoundedTable;
    throw ParseError("unknown feature kind '" + std::string(text) +
                     "' (expected 'continuous' or 'bounded_table')");
}

double ComponentRecord::value_of(const std::string& feature_id) const {
    const auto it = values.find(feature_id);
    if (it == values.end()) {
        throw ComputeError("missing feature " + feature_id);
    }
    return it->second;
}

GradeDistribution::GradeDistribution(const GradeMap<double>& weights) {
    double sum = 0.0;
    for (Grade g : kGrades) {
        const double w = weights[g];
        if (!std::isfinite(w)) {
            throw ComputeError("grade distribution weight for " +
                               format_grade(g) + " is not finite");
        }
        if (w < 0.0) {
            throw ComputeError("grade distribution weight for " +
                               format_grade(g) + " is negative");
        }
        sum += w;
    }
    if (sum <= 0.0) {
        throw ComputeError(
            "grade distribution weights are all zero; nothing to normalize");
    }
    for (Grade g : kGrades) {
        probs_[g] = weights[g] / sum;
    }
}

Grade GradeDistribution::top_grade() const {
    Grade best = Grade::A;
    for (Grade g : kGrades) {
        if (probs_[g] >= probs_[best]) {
            best = g; // >= so exact ties resolve to the worse grade
        }
    }
    return best;
}

} // namespace mgcs
