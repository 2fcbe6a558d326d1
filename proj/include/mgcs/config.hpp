#pragma once

#include "mgcs/domain.hpp"
#include "mgcs/dtree.hpp"
#include "mgcs/scenario.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace mgcs {

struct ConfigMetadata {
    std::string name;
    std::string version;

    bool operator==(const ConfigMetadata&) const = default;
};

// A scenario configuration document: metadata plus fully validated scenarios.
struct ScenarioConfig {
    ConfigMetadata metadata;
    std::vector<ScenarioSpec> scenarios;

    const ScenarioSpec* find_scenario(const std::string& id) const;
};

// Parses and validates a JSON configuration document. Throws ParseError with
// the parser's location on malformed JSON, ValidationError on invariant
// violations (priors sum, overlapping bins, model/kind mismatch, duplicate
// ids).
ScenarioConfig load_config(const std::string& text);

// Convenience wrapper returning just the scenario list.
std::vector<ScenarioSpec> load_scenario_config(const std::string& text);

nlohmann::json config_to_json(const ScenarioConfig& config);

// Component record from a JSON object ({"component_id", "values": {...}} or
// a flat feature->number object) or a single-row CSV with a feature-id
// header. Throws ParseError naming the offending feature on bad values.
ComponentRecord load_component(const std::string& text);

// Labeled dataset CSV: optional leading '#' comment lines, a header with
// feature ids plus a mandatory "grade" column (and optional "component_id"),
// then one row per record.
std::string dataset_to_csv(const LabeledDataset& dataset,
                           const std::vector<std::string>& comments = {});
LabeledDataset dataset_from_csv(const std::string& text);

// One grade label per line; an optional leading "grade" header is skipped.
std::vector<Grade> grades_from_csv(const std::string& text);

} // namespace mgcs
