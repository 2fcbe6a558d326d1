#pragma once

// Shared fixtures and the independent brute-force oracle used by the unit
// and acceptance suites. Everything here recomputes results from raw inputs
// (long double products and weighted sums) without touching the library's
// classification path.

#include "mgcs/domain.hpp"
#include "mgcs/grade.hpp"
#include "mgcs/likelihood.hpp"
#include "mgcs/scenario.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace testsupport {

inline mgcs::BinTable single_bin(double lo, double hi,
                                 std::array<double, 5> probs) {
    mgcs::BinTable table;
    mgcs::BinTable::Bin bin;
    bin.lo = lo;
    bin.hi = hi;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        bin.probs[mgcs::kGrades[i]] = probs[i];
    }
    table.bins.push_back(bin);
    return table;
}

inline mgcs::GradeMap<double> grade_values(std::array<double, 5> values) {
    mgcs::GradeMap<double> map;
    for (std::size_t i = 0; i < values.size(); ++i) {
        map[mgcs::kGrades[i]] = values[i];
    }
    return map;
}

inline mgcs::ScenarioFeature table_feature(std::string id, std::string name,
                                           std::string unit, double lo,
                                           double hi,
                                           std::array<double, 5> probs) {
    mgcs::ScenarioFeature feature;
    feature.def = {std::move(id), std::move(name), std::move(unit),
                   mgcs::FeatureKind::BoundedTable};
    feature.model = single_bin(lo, hi, probs);
    return feature;
}

// Strict high-performance scenario: published per-grade likelihood levels as
// full-range single-bin tables.
inline mgcs::ScenarioSpec strict_scenario() {
    mgcs::ScenarioSpec scenario;
    scenario.id = "U1";
    scenario.label = "External walls of commercial buildings";
    scenario.priors = grade_values({0.15, 0.25, 0.30, 0.20, 0.10});
    scenario.features = {
        table_feature("F1", "Residual load-bearing capacity", "%", 0, 100,
                      {0.004, 0.11, 0.07, 0.01, 0.0}),
        table_feature("F2", "Carbonation depth", "mm", 0, 50,
                      {0.8, 0.6, 0.4, 0.2, 0.1}),
        table_feature("F3", "Thermal insulation performance", "W/m2K", 0, 5,
                      {0.7, 0.9, 0.5, 0.3, 0.1}),
        table_feature("F4", "Fire resistance duration", "min", 0, 300,
                      {0.9, 0.8, 0.6, 0.3, 0.0}),
        table_feature("F5", "Surface damage rate", "%", 0, 100,
                      {0.6, 0.8, 0.7, 0.5, 0.3}),
    };
    scenario.thresholds["F1"] = {75.0, std::nullopt};
    scenario.thresholds["F4"] = {90.0, std::nullopt};
    return scenario;
}

// Relaxed warehouse scenario.
inline mgcs::ScenarioSpec relaxed_scenario() {
    mgcs::ScenarioSpec scenario;
    scenario.id = "U2";
    scenario.label = "Internal walls of warehouses";
    scenario.priors = grade_values({0.05, 0.20, 0.50, 0.20, 0.05});
    scenario.features = {
        table_feature("F1", "Residual load-bearing capacity", "%", 0, 100,
                      {0.004, 0.9, 0.8, 0.4, 0.1}),
        table_feature("F2", "Carbonation depth", "mm", 0, 50,
                      {0.6, 0.9, 0.6, 0.3, 0.1}),
        table_feature("F3", "Thermal insulation performance", "W/m2K", 0, 5,
                      {0.5, 0.7, 0.6, 0.4, 0.2}),
        table_feature("F4", "Fire resistance duration", "min", 0, 300,
                      {0.6, 0.5, 0.7, 0.5, 0.1}),
        table_feature("F5", "Surface damage rate", "%", 0, 100,
                      {0.5, 0.6, 0.7, 0.6, 0.4}),
    };
    scenario.thresholds["F1"] = {60.0, std::nullopt};
    scenario.thresholds["F4"] = {30.0, std::nullopt};
    return scenario;
}

inline mgcs::ComponentRecord panel_record() {
    mgcs::ComponentRecord record;
    record.component_id = "panel-001";
    record.values = {
        {"F1", 82.0}, {"F2", 7.0}, {"F3", 0.32}, {"F4", 110.0}, {"F5", 12.0}};
    return record;
}

// ---------------------------------------------------------------------------
// Brute-force oracle: grades enumerated, products and weighted sums taken in
// long double from the raw likelihood matrix. Ties resolve to the worse grade.

struct OracleOutcome {
    std::array<long double, 5> joints{};
    long double evidence = 0.0L;
    std::array<long double, 5> posterior{};
    std::size_t argmax = 0;
};

// feature_likelihoods[k][g]: likelihood of feature k under grade index g.
inline OracleOutcome brute_force(
    const std::vector<std::array<double, 5>>& feature_likelihoods,
    const std::array<double, 5>& priors) {
    OracleOutcome out;
    for (std::size_t g = 0; g < 5; ++g) {
        long double product = 1.0L;
        for (const auto& row : feature_likelihoods) {
            product *= static_cast<long double>(row[g]);
        }
        out.joints[g] = product;
        out.evidence += product * static_cast<long double>(priors[g]);
    }
    for (std::size_t g = 0; g < 5; ++g) {
        out.posterior[g] =
            out.joints[g] * static_cast<long double>(priors[g]) / out.evidence;
        if (out.posterior[g] >= out.posterior[out.argmax]) {
            out.argmax = g;
        }
    }
    return out;
}

// Random single-bin-table instance for property tests. Returns the scenario,
// a record hitting every bin, and the raw matrix + priors for the oracle.
struct RandomInstance {
    mgcs::ScenarioSpec scenario;
    mgcs::ComponentRecord record;
    std::vector<std::array<double, 5>> matrix; // [feature][grade]
    std::array<double, 5> priors{};
};

inline RandomInstance random_instance(std::mt19937_64& rng,
                                      std::size_t n_features = 5) {
    std::uniform_real_distribution<double> unit(0.001, 1.0);
    RandomInstance instance;
    instance.scenario.id = "R";
    double prior_sum = 0.0;
    for (auto& p : instance.priors) {
        p = unit(rng);
        prior_sum += p;
    }
    for (auto& p : instance.priors) p /= prior_sum;
    instance.scenario.priors = grade_values(
        {instance.priors[0], instance.priors[1], instance.priors[2],
         instance.priors[3], instance.priors[4]});

    for (std::size_t k = 0; k < n_features; ++k) {
        std::array<double, 5> row{};
        for (auto& v : row) v = unit(rng);
        instance.matrix.push_back(row);
        const std::string id = "F" + std::to_string(k + 1);
        instance.scenario.features.push_back(
            table_feature(id, id, "", 0.0, 1.0, row));
        instance.record.values[id] = 0.5;
    }
    instance.record.component_id = "random";
    return instance;
}

// ---------------------------------------------------------------------------
// Minimal DOT digraph checker: enough grammar to catch malformed exports.

inline bool is_valid_dot(const std::string& text, std::string* error = nullptr) {
    static const std::regex node_re(
        R"(^\s*n\d+ \[shape=\w+, label="(\\.|[^"\\])*"\];$)");
    static const std::regex edge_re(
        R"(^\s*n(\d+) -> n(\d+) \[label="(\\.|[^"\\])*"\];$)");

    std::istringstream stream(text);
    std::string line;
    if (!std::getline(stream, line) || line != "digraph decision_tree {") {
        if (error) *error = "missing digraph header";
        return false;
    }
    bool closed = false;
    std::vector<int> defined;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        if (line == "}") {
            closed = true;
            continue;
        }
        if (closed) {
            if (error) *error = "content after closing brace: " + line;
            return false;
        }
        std::smatch match;
        if (std::regex_match(line, match, node_re)) {
            defined.push_back(
                std::stoi(line.substr(line.find('n') + 1)));
            continue;
        }
        if (std::regex_match(line, match, edge_re)) {
            edges.emplace_back(std::stoi(match[1]), std::stoi(match[2]));
            continue;
        }
        if (error) *error = "unrecognized line: " + line;
        return false;
    }
    if (!closed) {
        if (error) *error = "missing closing brace";
        return false;
    }
    for (const auto& [from, to] : edges) {
        bool from_defined = false;
        bool to_defined = false;
        for (int id : defined) {
            if (id == from) from_defined = true;
            if (id == to) to_defined = true;
        }
        if (!from_defined || !to_defined) {
            if (error) *error = "edge references undefined node";
            return false;
        }
    }
    return true;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace testsupport
