#include "mgcs/dtree.hpp"

#include "mgcs/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <utility>

namespace mgcs {

namespace {

// Deterministic sampling transforms on top of mt19937_64. The standard
// distributions are implementation-defined, so the transforms are spelled
// out here to keep datasets reproducible across toolchains.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; offsets keep the uniforms inside (0,1).
    double normal() {
        const double u1 =
            (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
        const double u2 =
            (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
    }

private:
    std::mt19937_64 engine_;
};

Grade draw_grade(const GradeMap<double>& priors, SampleRng& rng) {
    const double u = rng.uniform();
    double cumulative = 0.0;
    for (Grade g : kGrades) {
        cumulative += priors[g];
        if (u < cumulative) return g;
    }
    return Grade::E;
}

double draw_feature_value(const ScenarioFeature& feature, Grade grade,
                          SampleRng& rng) {
    if (const auto* gaussian = std::get_if<GaussianPerGrade>(&feature.model)) {
        const GaussianParams& p = gaussian->params[grade];
        double value = p.mu + p.sigma * rng.normal();
        if (feature.def.is_percentage()) {
            value = std::clamp(value, 0.0, 100.0);
        }
        return value;
    }

    const auto& table = std::get<BinTable>(feature.model);
    // Bin mass for a grade is its likelihood level times the bin width;
    // the bin is drawn by mass, the value uniformly within it.
    double total_mass = 0.0;
    for (const auto& bin : table.bins) {
        total_mass += bin.probs[grade] * (bin.hi - bin.lo);
    }
    if (total_mass <= 0.0) {
        throw ComputeError("feature " + feature.def.id + ": grade " +
                           format_grade(grade) +
                           " has zero likelihood mass, not sampleable");
    }
    const double target = rng.uniform() * total_mass;
    double cumulative = 0.0;
    for (const auto& bin : table.bins) {
        cumulative += bin.probs[grade] * (bin.hi - bin.lo);
        if (target < cumulative) {
            return bin.lo + rng.uniform() * (bin.hi - bin.lo);
        }
    }
    const auto& last = table.bins.back();
    return last.lo + rng.uniform() * (last.hi - last.lo);
}

double gini_impurity(const GradeMap<std::int64_t>& counts, std::int64_t total) {
    double impurity = 1.0;
    for (Grade g : kGrades) {
        const double p = static_cast<double>(counts[g]) /
                         static_cast<double>(total);
        impurity -= p * p;
    }
    return impurity;
}

Grade majority_grade(const GradeMap<std::int64_t>& counts) {
    Grade best = Grade::A;
    for (Grade g : kGrades) {
        if (counts[g] >= counts[best]) best = g; // ties go to the worse grade
    }
    return best;
}

struct Trainer {
    const LabeledDataset& data;
    const TrainParams& params;
    std::vector<std::string> feature_ids; // sorted

    std::unique_ptr<TreeNode> build(std::vector<std::size_t>& indices,
                                    int depth) {
        GradeMap<std::int64_t> counts;
        for (std::size_t i : indices) counts[data.labels[i]]++;
        const auto total = static_cast<std::int64_t>(indices.size());

        const auto make_leaf = [&] {
            return std::make_unique<TreeNode>(
                TreeNode::Leaf{majority_grade(counts), counts});
        };

        bool pure = false;
        for (Grade g : kGrades) {
            if (counts[g] == total) pure = true;
        }
        if (pure || depth >= params.max_depth ||
            total < 2 * static_cast<std::int64_t>(params.min_leaf)) {
            return make_leaf();
        }

        const double parent_impurity = gini_impurity(counts, total);
        bool found = false;
        std::string best_feature;
        double best_threshold = 0.0;
        double best_impurity = parent_impurity;

        std::vector<std::pair<double, Grade>> ordered(indices.size());
        for (const std::string& feature_id : feature_ids) {
            for (std::size_t k = 0; k < indices.size(); ++k) {
                const std::size_t i = indices[k];
                ordered[k] = {data.records[i].values.at(feature_id),
                              data.labels[i]};
            }
            std::sort(ordered.begin(), ordered.end(),
                      [](const auto& a, const auto& b) {
                          return a.first < b.first;
                      });

            GradeMap<std::int64_t> left_counts;
            for (std::size_t k = 0; k + 1 < ordered.size(); ++k) {
                left_counts[ordered[k].second]++;
                if (ordered[k].first == ordered[k + 1].first) continue;

                const auto left_n = static_cast<std::int64_t>(k + 1);
                const std::int64_t right_n = total - left_n;
                if (left_n < params.min_leaf || right_n < params.min_leaf) {
                    continue;
                }
                GradeMap<std::int64_t> right_counts;
                for (Grade g : kGrades) {
                    right_counts[g] = counts[g] - left_counts[g];
                }
                const double weighted =
                    (static_cast<double>(left_n) *
                         gini_impurity(left_counts, left_n) +
                     static_cast<double>(right_n) *
                         gini_impurity(right_counts, right_n)) /
                    static_cast<double>(total);
                // Strict improvement only; first hit wins on exact ties,
                // which fixes lower feature id then lower threshold.
                if (weighted < best_impurity) {
                    best_impurity = weighted;
                    best_feature = feature_id;
                    best_threshold =
                        ordered[k].first +
                        (ordered[k + 1].first - ordered[k].first) / 2.0;
                    found = true;
                }
            }
        }

        if (!found) return make_leaf();

        std::vector<std::size_t> left_indices;
        std::vector<std::size_t> right_indices;
        for (std::size_t i : indices) {
            if (data.records[i].values.at(best_feature) < best_threshold) {
                left_indices.push_back(i);
            } else {
                right_indices.push_back(i);
            }
        }

        TreeNode::Split split;
        split.feature_id = best_feature;
        split.threshold = best_threshold;
        split.left = build(left_indices, depth + 1);
        split.right = build(right_indices, depth + 1);
        return std::make_unique<TreeNode>(std::move(split));
    }
};

void write_dot_node(const TreeNode& node, std::ostream& out, int& next_id);

std::string escape_dot(std::string_view text) {
    std::string escaped;
    escaped.reserve(text.size());
    for (char c : text) {
        if (c == '"' || c == '\\') escaped.push_back('\\');
        escaped.push_back(c);
    }
    return escaped;
}

std::string format_threshold(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

void write_dot_node(const TreeNode& node, std::ostream& out, int& next_id) {
    const int id = next_id++;
    if (node.is_leaf()) {
        const auto& leaf = node.leaf();
        out << "  n" << id << " [shape=ellipse, label=\""
            << grade_letter(leaf.grade) << "\\n[";
        bool first = true;
        for (Grade g : kGrades) {
            if (!first) out << " ";
            first = false;
            out << grade_letter(g) << "=" << leaf.class_counts[g];
        }
        out << "]\"];\n";
        return;
    }
    const auto& split = node.split();
    out << "  n" << id << " [shape=box, label=\""
        << escape_dot(split.feature_id) << " < "
        << format_threshold(split.threshold) << "\"];\n";
    const int left_id = next_id;
    write_dot_node(*split.left, out, next_id);
    const int right_id = next_id;
    write_dot_node(*split.right, out, next_id);
    out << "  n" << id << " -> n" << left_id << " [label=\"yes\"];\n";
    out << "  n" << id << " -> n" << right_id << " [label=\"no\"];\n";
}

} // namespace

LabeledDataset sample_components(const ScenarioSpec& scenario, std::int64_t n,
                                 std::uint64_t seed) {
    if (n < 0) {
        throw ComputeError("sample count must be >= 0, got " +
                           std::to_string(n));
    }
    scenario.validate();

    SampleRng rng(seed);
    LabeledDataset dataset;
    dataset.records.reserve(static_cast<std::size_t>(n));
    dataset.labels.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const Grade grade = draw_grade(scenario.priors, rng);
        ComponentRecord record;
        char id[32];
        std::snprintf(id, sizeof(id), "s%06lld", static_cast<long long>(i));
        record.component_id = id;
        for (const auto& feature : scenario.features) {
            record.values[feature.def.id] =
                draw_feature_value(feature, grade, rng);
        }
        dataset.records.push_back(std::move(record));
        dataset.labels.push_back(grade);
    }
    return dataset;
}

TreeNode train_tree(const LabeledDataset& data, const TrainParams& params) {
    if (data.records.empty()) {
        throw ComputeError("cannot train a tree on an empty dataset");
    }
    if (data.records.size() != data.labels.size()) {
        throw ComputeError("dataset has " + std::to_string(data.records.size()) +
                           " records but " + std::to_string(data.labels.size()) +
                           " labels");
    }
    if (params.max_depth < 0) {
        throw ComputeError("max_depth must be >= 0");
    }
    if (params.min_leaf < 1) {
        throw ComputeError("min_leaf must be >= 1");
    }

    Trainer trainer{data, params, {}};
    for (const auto& [feature_id, value] : data.records.front().values) {
        (void)value;
        trainer.feature_ids.push_back(feature_id);
    }
    for (const auto& record : data.records) {
        for (const std::string& feature_id : trainer.feature_ids) {
            if (!record.values.count(feature_id)) {
                throw ComputeError("record " + record.component_id +
                                   " missing feature " + feature_id);
            }
        }
    }

    std::vector<std::size_t> indices(data.records.size());
    for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
    return std::move(*trainer.build(indices, 0));
}

Grade predict_tree(const TreeNode& tree, const ComponentRecord& record) {
    const TreeNode* node = &tree;
    while (!node->is_leaf()) {
        const auto& split = node->split();
        const double value = record.value_of(split.feature_id);
        node = value < split.threshold ? split.left.get() : split.right.get();
    }
    return node->leaf().grade;
}

std::string export_tree_dot(const TreeNode& tree) {
    std::ostringstream out;
    out << "digraph decision_tree {\n";
    int next_id = 0;
    write_dot_node(tree, out, next_id);
    out << "}\n";
    return out.str();
}

nlohmann::json tree_to_json(const TreeNode& tree) {
    nlohmann::json j;
    if (tree.is_leaf()) {
        const auto& leaf = tree.leaf();
        j["kind"] = "leaf";
        j["grade"] = format_grade(leaf.grade);
        nlohmann::json counts;
        for (Grade g : kGrades) {
            counts[format_grade(g)] = leaf.class_counts[g];
        }
        j["counts"] = std::move(counts);
        return j;
    }
    const auto& split = tree.split();
    j["kind"] = "split";
    j["feature_id"] = split.feature_id;
    j["threshold"] = split.threshold;
    j["left"] = tree_to_json(*split.left);
    j["right"] = tree_to_json(*split.right);
    return j;
}

TreeNode tree_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind")) {
        throw ParseError("tree node must be an object with a 'kind' field");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "leaf") {
        TreeNode::Leaf leaf;
        leaf.grade = parse_grade(j.at("grade").get<std::string>());
        const auto& counts = j.at("counts");
        for (Grade g : kGrades) {
            const auto count = counts.at(format_grade(g)).get<std::int64_t>();
            if (count < 0) {
                throw ParseError("leaf count for grade " + format_grade(g) +
                                 " is negative");
            }
            leaf.class_counts[g] = count;
        }
        return TreeNode(std::move(leaf));
    }
    if (kind == "split") {
        TreeNode::Split split;
        split.feature_id = j.at("feature_id").get<std::string>();
        split.threshold = j.at("threshold").get<double>();
        if (!std::isfinite(split.threshold)) {
            throw ParseError("split threshold must be finite");
        }
        split.left = std::make_unique<TreeNode>(tree_from_json(j.at("left")));
        split.right = std::make_unique<TreeNode>(tree_from_json(j.at("right")));
        return TreeNode(std::move(split));
    }
    throw ParseError("unknown tree node kind '" + kind + "'");
}

} // namespace mgcs
