#include "mgcs/likelihood.hpp"

#include "mgcs/error.hpp"

#include <cmath>
#include <string>

namespace mgcs {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string feature_prefix(std::string_view feature_id) {
    return feature_id.empty() ? std::string{}
                              : "feature " + std::string(feature_id) + ": ";
}

} // namespace

double gaussian_pdf(double x, double mu, double sigma) {
    if (!(sigma > 0.0)) {
        throw ComputeError("gaussian sigma must be > 0, got " +
                           std::to_string(sigma));
    }
    if (!std::isfinite(x) || !std::isfinite(mu)) {
        throw ComputeError("gaussian_pdf requires finite x and mu");
    }
    const double z = (x - mu) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(kTwoPi));
}

const GradeMap<double>& table_lookup(double value, const BinTable& table,
                                     std::string_view feature_id) {
    if (table.bins.empty()) {
        throw ComputeError(feature_prefix(feature_id) +
                           "likelihood table has no bins");
    }
    for (std::size_t i = 0; i < table.bins.size(); ++i) {
        const auto& bin = table.bins[i];
        const bool last = (i + 1 == table.bins.size());
        if (value >= bin.lo && (value < bin.hi || (last && value == bin.hi))) {
            return bin.probs;
        }
    }
    throw ComputeError(feature_prefix(feature_id) + "value " +
                       std::to_string(value) + " lies outside all bins [" +
                       std::to_string(table.bins.front().lo) + ", " +
                       std::to_string(table.bins.back().hi) + "]");
}

double feature_likelihood(double value, const LikelihoodModel& model,
                          Grade grade, std::string_view feature_id) {
    if (const auto* gaussian = std::get_if<GaussianPerGrade>(&model)) {
        const GaussianParams& p = gaussian->params[grade];
        return gaussian_pdf(value, p.mu, p.sigma);
    }
    return table_lookup(value, std::get<BinTable>(model), feature_id)[grade];
}

void validate_model(const LikelihoodModel& model, const FeatureDef& def) {
    if (const auto* gaussian = std::get_if<GaussianPerGrade>(&model)) {
        if (def.kind != FeatureKind::Continuous) {
            throw ValidationError("feature " + def.id +
                                  ": gaussian model requires kind 'continuous'");
        }
        for (Grade g : kGrades) {
            const GaussianParams& p = gaussian->params[g];
            if (!std::isfinite(p.mu) || !std::isfinite(p.sigma)) {
                throw ValidationError("feature " + def.id + ": grade " +
                                      format_grade(g) +
                                      " has non-finite gaussian parameters");
            }
            if (!(p.sigma > 0.0)) {
                throw ValidationError("feature " + def.id + ": grade " +
                                      format_grade(g) + " has sigma " +
                                      std::to_string(p.sigma) +
                                      " (must be > 0)");
            }
        }
        return;
    }

    const auto& table = std::get<BinTable>(model);
    if (def.kind != FeatureKind::BoundedTable) {
        throw ValidationError("feature " + def.id +
                              ": table model requires kind 'bounded_table'");
    }
    if (table.bins.empty()) {
        throw ValidationError("feature " + def.id + ": table has no bins");
    }
    for (std::size_t i = 0; i < table.bins.size(); ++i) {
        const auto& bin = table.bins[i];
        if (!std::isfinite(bin.lo) || !std::isfinite(bin.hi) ||
            !(bin.lo < bin.hi)) {
            throw ValidationError("feature " + def.id + ": bin " +
                                  std::to_string(i) + " needs lo < hi");
        }
        if (i > 0 && bin.lo < table.bins[i - 1].hi) {
            throw ValidationError("feature " + def.id +
                                  ": bins overlap or are out of order at [" +
                                  std::to_string(bin.lo) + ", " +
                                  std::to_string(bin.hi) + ")");
        }
        for (Grade g : kGrades) {
            const double p = bin.probs[g];
            if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
                throw ValidationError(
                    "feature " + def.id + ": bin " + std::to_string(i) +
                    " grade " + format_grade(g) + " likelihood " +
                    std::to_string(p) + " outside [0, 1]");
            }
        }
    }
}

} // namespace mgcs
