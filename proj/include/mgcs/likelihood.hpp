#pragma once

#include "mgcs/domain.hpp"
#include "mgcs/grade.hpp"

#include <string_view>
#include <variant>
#include <vector>

namespace mgcs {

struct GaussianParams {
    double mu = 0.0;
    double sigma = 1.0; // must stay strictly positive

    bool operator==(const GaussianParams&) const = default;
};

// Per-grade normal model for a continuous feature.
struct GaussianPerGrade {
    GradeMap<GaussianParams> params;

    bool operator==(const GaussianPerGrade&) const = default;
};

// Value-binned likelihood table. Entries are per-grade likelihoods in [0,1];
// rows are not distributions over grades and need not sum to 1.
struct BinTable {
    struct Bin {
        double lo = 0.0;
        double hi = 0.0; // lo < hi
        GradeMap<double> probs;

        bool operator==(const Bin&) const = default;
    };

    // Non-overlapping, sorted by lo.
    std::vector<Bin> bins;

    bool operator==(const BinTable&) const = default;
};

using LikelihoodModel = std::variant<GaussianPerGrade, BinTable>;

// Normal density at x. Throws ComputeError when sigma <= 0 or x not finite.
// May exceed 1 for sigma < 1/sqrt(2*pi): this is a density, not a mass.
double gaussian_pdf(double x, double mu, double sigma);

// Row of the bin containing `value`. Bins are half-open [lo, hi); the final
// bin closes at hi. Values outside every bin raise ComputeError; feature_id,
// when provided, names the offending feature in the message.
const GradeMap<double>& table_lookup(double value, const BinTable& table,
                                     std::string_view feature_id = {});

// P(value | grade) under the model: Gaussian density or table row entry.
double feature_likelihood(double value, const LikelihoodModel& model, Grade grade,
                          std::string_view feature_id = {});

// Structural checks for a model attached to a feature definition:
// form matches the feature kind, sigmas positive, bins sorted/non-overlapping,
// table entries in [0, 1]. Throws ValidationError.
void validate_model(const LikelihoodModel& model, const FeatureDef& def);

} // namespace mgcs
