#include "mgcs/config.hpp"

#include "mgcs/error.hpp"
#include "mgcs/likelihood.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace mgcs {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

double require_number(const json& j, const std::string& context) {
    if (!j.is_number()) {
        throw ParseError(context + " must be a number, got " +
                         std::string(j.type_name()));
    }
    const double value = j.get<double>();
    if (!std::isfinite(value)) {
        throw ParseError(context + " must be finite");
    }
    return value;
}

std::string require_string(const json& j, const std::string& context) {
    if (!j.is_string()) {
        throw ParseError(context + " must be a string");
    }
    return j.get<std::string>();
}

GradeMap<double> read_grade_numbers(const json& j, const std::string& context) {
    if (!j.is_object()) {
        throw ParseError(context + " must be an object keyed by grade");
    }
    GradeMap<double> values;
    std::size_t seen = 0;
    for (Grade g : kGrades) {
        const std::string key = format_grade(g);
        if (!j.contains(key)) {
            throw ValidationError(context + " is missing grade " + key);
        }
        values[g] = require_number(j.at(key), context + "." + key);
        seen++;
    }
    if (j.size() != seen) {
        throw ValidationError(context + " has unexpected extra keys");
    }
    return values;
}

LikelihoodModel read_likelihood(const json& j, const std::string& context) {
    if (!j.is_object() || j.size() != 1 ||
        (!j.contains("gaussian") && !j.contains("table"))) {
        throw ValidationError(context +
                              " must contain exactly one of 'gaussian' or "
                              "'table'");
    }
    if (j.contains("gaussian")) {
        const json& params = j.at("gaussian");
        GaussianPerGrade model;
        for (Grade g : kGrades) {
            const std::string key = format_grade(g);
            if (!params.contains(key)) {
                throw ValidationError(context + ".gaussian is missing grade " +
                                      key);
            }
            const json& entry = params.at(key);
            model.params[g].mu =
                require_number(entry.at("mu"), context + ".gaussian." + key +
                                                   ".mu");
            model.params[g].sigma = require_number(
                entry.at("sigma"), context + ".gaussian." + key + ".sigma");
        }
        return model;
    }

    const json& bins = j.at("table");
    if (!bins.is_array() || bins.empty()) {
        throw ValidationError(context + ".table must be a non-empty array");
    }
    BinTable table;
    for (std::size_t i = 0; i < bins.size(); ++i) {
        const std::string bin_context =
            context + ".table[" + std::to_string(i) + "]";
        const json& entry = bins.at(i);
        BinTable::Bin bin;
        bin.lo = require_number(entry.at("lo"), bin_context + ".lo");
        bin.hi = require_number(entry.at("hi"), bin_context + ".hi");
        bin.probs = read_grade_numbers(entry.at("probs"),
                                       bin_context + ".probs");
        table.bins.push_back(std::move(bin));
    }
    std::stable_sort(table.bins.begin(), table.bins.end(),
                     [](const BinTable::Bin& a, const BinTable::Bin& b) {
                         return a.lo < b.lo;
                     });
    return table;
}

ScenarioSpec read_scenario(const json& j, std::size_t index) {
    const std::string context = "scenarios[" + std::to_string(index) + "]";
    if (!j.is_object()) {
        throw ParseError(context + " must be an object");
    }
    ScenarioSpec scenario;
    scenario.id = require_string(j.at("id"), context + ".id");
    scenario.label =
        j.contains("label") ? require_string(j.at("label"), context + ".label")
                            : std::string{};
    scenario.priors = read_grade_numbers(j.at("priors"), context + ".priors");

    const json& features = j.at("features");
    if (!features.is_array()) {
        throw ParseError(context + ".features must be an array");
    }
    for (std::size_t i = 0; i < features.size(); ++i) {
        const json& fj = features.at(i);
        const std::string fcontext =
            context + ".features[" + std::to_string(i) + "]";
        ScenarioFeature feature;
        feature.def.id = require_string(fj.at("id"), fcontext + ".id");
        feature.def.name = fj.contains("name")
                               ? require_string(fj.at("name"), fcontext + ".name")
                               : std::string{};
        feature.def.unit = fj.contains("unit")
                               ? require_string(fj.at("unit"), fcontext + ".unit")
                               : std::string{};
        feature.def.kind = parse_feature_kind(
            require_string(fj.at("kind"), fcontext + ".kind"));
        feature.model = read_likelihood(fj.at("likelihood"),
                                        fcontext + ".likelihood");

        if (fj.contains("thresholds")) {
            const json& tj = fj.at("thresholds");
            if (!tj.is_object()) {
                throw ParseError(fcontext + ".thresholds must be an object");
            }
            ThresholdRange range;
            if (tj.contains("min")) {
                range.min = require_number(tj.at("min"),
                                           fcontext + ".thresholds.min");
            }
            if (tj.contains("max")) {
                range.max = require_number(tj.at("max"),
                                           fcontext + ".thresholds.max");
            }
            if (range.min || range.max) {
                scenario.thresholds[feature.def.id] = range;
            }
        }
        scenario.features.push_back(std::move(feature));
    }
    scenario.validate();
    return scenario;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream stream(line);
    while (std::getline(stream, cell, ',')) {
        // trim surrounding whitespace
        const auto begin = cell.find_first_not_of(" \t\r");
        const auto end = cell.find_last_not_of(" \t\r");
        cells.push_back(begin == std::string::npos
                            ? std::string{}
                            : cell.substr(begin, end - begin + 1));
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::vector<std::string> csv_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

double parse_cell_number(const std::string& cell, const std::string& context) {
    try {
        std::size_t consumed = 0;
        const double value = std::stod(cell, &consumed);
        if (consumed != cell.size() || !std::isfinite(value)) {
            throw std::invalid_argument(cell);
        }
        return value;
    } catch (const std::exception&) {
        throw ParseError(context + ": value '" + cell + "' is not a number");
    }
}

std::string format_value(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

ComponentRecord component_from_json(const json& j) {
    ComponentRecord record;
    const json* values = &j;
    if (j.contains("values")) {
        record.component_id = j.contains("component_id")
                                  ? require_string(j.at("component_id"),
                                                   "component_id")
                                  : "component";
        values = &j.at("values");
    } else {
        record.component_id = "component";
    }
    if (!values->is_object() || values->empty()) {
        throw ParseError("component document has no feature values");
    }
    for (const auto& [key, value] : values->items()) {
        if (key == "component_id") {
            record.component_id = require_string(value, "component_id");
            continue;
        }
        record.values[key] = require_number(value, "feature " + key);
    }
    if (record.values.empty()) {
        throw ParseError("component document has no feature values");
    }
    return record;
}

ComponentRecord component_from_csv(const std::string& text) {
    const auto lines = csv_lines(text);
    if (lines.size() < 2) {
        throw ParseError(
            "component CSV needs a header line and one data line");
    }
    const auto header = split_csv_line(lines[0]);
    const auto cells = split_csv_line(lines[1]);
    if (header.size() != cells.size()) {
        throw ParseError("component CSV header and data column counts differ");
    }
    ComponentRecord record;
    record.component_id = "component";
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "component_id") {
            record.component_id = cells[i];
            continue;
        }
        record.values[header[i]] =
            parse_cell_number(cells[i], "feature " + header[i]);
    }
    if (record.values.empty()) {
        throw ParseError("component CSV has no feature columns");
    }
    return record;
}

} // namespace

const ScenarioSpec* ScenarioConfig::find_scenario(const std::string& id) const {
    for (const auto& scenario : scenarios) {
        if (scenario.id == id) return &scenario;
    }
    return nullptr;
}

ScenarioConfig load_config(const std::string& text) {
    const json j = parse_json(text, "scenario config");
    if (!j.is_object() || !j.contains("scenarios")) {
        throw ParseError("scenario config must be an object with 'scenarios'");
    }
    ScenarioConfig config;
    if (j.contains("metadata")) {
        const json& metadata = j.at("metadata");
        if (metadata.contains("name")) {
            config.metadata.name =
                require_string(metadata.at("name"), "metadata.name");
        }
        if (metadata.contains("version")) {
            config.metadata.version =
                require_string(metadata.at("version"), "metadata.version");
        }
    }
    const json& scenarios = j.at("scenarios");
    if (!scenarios.is_array() || scenarios.empty()) {
        throw ParseError("'scenarios' must be a non-empty array");
    }
    std::set<std::string> ids;
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        ScenarioSpec scenario = read_scenario(scenarios.at(i), i);
        if (!ids.insert(scenario.id).second) {
            throw ValidationError("duplicate scenario id " + scenario.id);
        }
        config.scenarios.push_back(std::move(scenario));
    }
    return config;
}

std::vector<ScenarioSpec> load_scenario_config(const std::string& text) {
    return load_config(text).scenarios;
}

nlohmann::json config_to_json(const ScenarioConfig& config) {
    json j;
    j["metadata"] = {{"name", config.metadata.name},
                     {"version", config.metadata.version}};
    json scenarios = json::array();
    for (const auto& scenario : config.scenarios) {
        json sj;
        sj["id"] = scenario.id;
        sj["label"] = scenario.label;
        json priors;
        for (Grade g : kGrades) priors[format_grade(g)] = scenario.priors[g];
        sj["priors"] = std::move(priors);
        json features = json::array();
        for (const auto& feature : scenario.features) {
            json fj;
            fj["id"] = feature.def.id;
            fj["name"] = feature.def.name;
            fj["unit"] = feature.def.unit;
            fj["kind"] = std::string(feature_kind_name(feature.def.kind));
            if (const auto it = scenario.thresholds.find(feature.def.id);
                it != scenario.thresholds.end()) {
                json tj;
                if (it->second.min) tj["min"] = *it->second.min;
                if (it->second.max) tj["max"] = *it->second.max;
                fj["thresholds"] = std::move(tj);
            }
            if (const auto* gaussian =
                    std::get_if<GaussianPerGrade>(&feature.model)) {
                json params;
                for (Grade g : kGrades) {
                    params[format_grade(g)] = {
                        {"mu", gaussian->params[g].mu},
                        {"sigma", gaussian->params[g].sigma}};
                }
                fj["likelihood"] = {{"gaussian", std::move(params)}};
            } else {
                const auto& table = std::get<BinTable>(feature.model);
                json bins = json::array();
                for (const auto& bin : table.bins) {
                    json probs;
                    for (Grade g : kGrades) {
                        probs[format_grade(g)] = bin.probs[g];
                    }
                    bins.push_back({{"lo", bin.lo},
                                    {"hi", bin.hi},
                                    {"probs", std::move(probs)}});
                }
                fj["likelihood"] = {{"table", std::move(bins)}};
            }
            features.push_back(std::move(fj));
        }
        sj["features"] = std::move(features);
        scenarios.push_back(std::move(sj));
    }
    j["scenarios"] = std::move(scenarios);
    return j;
}

ComponentRecord load_component(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw ParseError("component document is empty");
    }
    if (text[first] == '{') {
        const json j = parse_json(text, "component document");
        return component_from_json(j);
    }
    return component_from_csv(text);
}

std::string dataset_to_csv(const LabeledDataset& dataset,
                           const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& comment : comments) {
        out << "# " << comment << "\n";
    }
    std::vector<std::string> feature_ids;
    if (!dataset.records.empty()) {
        for (const auto& [feature_id, value] : dataset.records.front().values) {
            (void)value;
            feature_ids.push_back(feature_id);
        }
    }
    out << "component_id";
    for (const auto& feature_id : feature_ids) out << "," << feature_id;
    out << ",grade\n";
    for (std::size_t i = 0; i < dataset.records.size(); ++i) {
        const auto& record = dataset.records[i];
        out << record.component_id;
        for (const auto& feature_id : feature_ids) {
            const auto it = record.values.find(feature_id);
            if (it == record.values.end()) {
                throw ComputeError("record " + record.component_id +
                                   " missing feature " + feature_id);
            }
            out << "," << format_value(it->second);
        }
        out << "," << grade_letter(dataset.labels.at(i)) << "\n";
    }
    return out.str();
}

LabeledDataset dataset_from_csv(const std::string& text) {
    const auto lines = csv_lines(text);
    if (lines.empty()) {
        throw ParseError("dataset CSV is empty");
    }
    const auto header = split_csv_line(lines[0]);
    std::size_t grade_column = header.size();
    std::size_t id_column = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "grade") grade_column = i;
        if (header[i] == "component_id") id_column = i;
    }
    if (grade_column == header.size()) {
        throw ParseError("dataset CSV header has no 'grade' column");
    }

    LabeledDataset dataset;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        const auto cells = split_csv_line(lines[row]);
        if (cells.size() != header.size()) {
            throw ParseError("dataset CSV row " + std::to_string(row) +
                             " has " + std::to_string(cells.size()) +
                             " cells, expected " +
                             std::to_string(header.size()));
        }
        ComponentRecord record;
        record.component_id = id_column < header.size()
                                  ? cells[id_column]
                                  : "r" + std::to_string(row - 1);
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i == grade_column || i == id_column) continue;
            record.values[header[i]] = parse_cell_number(
                cells[i], "row " + std::to_string(row) + " feature " +
                              header[i]);
        }
        if (record.values.empty()) {
            throw ParseError("dataset CSV has no feature columns");
        }
        dataset.records.push_back(std::move(record));
        dataset.labels.push_back(parse_grade(cells[grade_column]));
    }
    if (dataset.records.empty()) {
        throw ParseError("dataset CSV has no data rows");
    }
    return dataset;
}

std::vector<Grade> grades_from_csv(const std::string& text) {
    const auto lines = csv_lines(text);
    std::vector<Grade> grades;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto cells = split_csv_line(lines[i]);
        if (cells.empty() || cells[0].empty()) continue;
        if (i == 0) {
            std::string lowered = cells[0];
            std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                           [](unsigned char c) { return std::tolower(c); });
            if (lowered == "grade") continue; // header
        }
        grades.push_back(parse_grade(cells[0]));
    }
    return grades;
}

} // namespace mgcs
