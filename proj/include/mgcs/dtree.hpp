#pragma once

#include "mgcs/domain.hpp"
#include "mgcs/grade.hpp"
#include "mgcs/scenario.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace mgcs {

// Records with parallel grade labels, for tree training and evaluation.
struct LabeledDataset {
    std::vector<ComponentRecord> records;
    std::vector<Grade> labels;

    std::size_t size() const { return records.size(); }
};

// Binary threshold tree: splits route value < threshold to the left child,
// value >= threshold to the right.
class TreeNode {
public:
    struct Split {
        std::string feature_id;
        double threshold = 0.0;
        std::unique_ptr<TreeNode> left;
        std::unique_ptr<TreeNode> right;
    };

    struct Leaf {
        Grade grade = Grade::A; // majority of class_counts, worse wins ties
        GradeMap<std::int64_t> class_counts;
    };

    explicit TreeNode(Split split) : node_(std::move(split)) {}
    explicit TreeNode(Leaf leaf) : node_(std::move(leaf)) {}

    bool is_leaf() const { return std::holds_alternative<Leaf>(node_); }
    const Split& split() const { return std::get<Split>(node_); }
    const Leaf& leaf() const { return std::get<Leaf>(node_); }

private:
    std::variant<Split, Leaf> node_;
};

struct TrainParams {
    int max_depth = 4;
    int min_leaf = 1;
};

// Draws labeled synthetic components from a scenario's generative model:
// grade ~ priors, then each feature value from its per-grade model
// (Gaussian directly; bin tables by bin mass, uniform within the bin).
// Fully determined by (scenario, n, seed); the generator is mt19937_64
// with explicit sampling transforms, so datasets are reproducible.
// Percentage-unit features are clamped into [0, 100].
LabeledDataset sample_components(const ScenarioSpec& scenario, std::int64_t n,
                                 std::uint64_t seed);

// Greedy CART induction minimizing weighted Gini impurity. Candidate
// thresholds are midpoints between consecutive distinct sorted values.
// Deterministic: ties are broken by lower feature id, then lower threshold.
// Throws ComputeError on an empty or inconsistent dataset.
TreeNode train_tree(const LabeledDataset& data, const TrainParams& params);

// Routes the record to a leaf and returns its grade. Throws ComputeError
// naming any feature the record is missing.
Grade predict_tree(const TreeNode& tree, const ComponentRecord& record);

// DOT digraph: split nodes labeled "F < t" with yes/no edges, leaves labeled
// with grade and class counts. Deterministic for a given tree.
std::string export_tree_dot(const TreeNode& tree);

nlohmann::json tree_to_json(const TreeNode& tree);
TreeNode tree_from_json(const nlohmann::json& j);

} // namespace mgcs
