#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "contrastix/cnf.hpp"
#include "contrastix/json.hpp"

namespace contrastix {

class TreeFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Boolean test "feature <= threshold".
struct Pivot {
    std::string id;
    std::string feature;
    double threshold = 0.0;
};

struct TreeNode {
    bool is_leaf = false;
    std::string label;          // leaf class
    std::size_t pivot = 0;      // index into TreeModel::pivots
    std::size_t on_true = 0;    // child index when the pivot holds
    std::size_t on_false = 0;
};

/// A binary decision tree over threshold pivots. Declared pivots testing the
/// same (feature, threshold) are merged into the first one.
struct TreeModel {
    std::vector<Pivot> pivots;
    std::vector<std::string> classes;
    std::vector<TreeNode> nodes;
    std::size_t root = 0;

    [[nodiscard]] bool has_class(std::string_view c) const;
};

/// Tree JSON: {"pivots":[{"id","feature","op":"<=","threshold"}],"classes":[...],
/// "root": {"pivot":id,"true":node,"false":node} | {"leaf":class}}.
TreeModel load_tree(std::string_view json_text);
TreeModel tree_from_json(const Json& j);

/// Interns the pivot ids into `vocab` in declaration order and returns their symbols.
std::vector<Symbol> pivot_symbols(const TreeModel& tree, Vocabulary& vocab);

/// Disjunction over root-to-leaf paths ending in `cls` of the path's branch
/// literals; Bottom when no leaf carries the class.
Formula class_formula(const TreeModel& tree, std::string_view cls, Vocabulary& vocab);

/// Total assignment over the pivots: a pivot is true iff its feature value is
/// at most the threshold.
PartialAssignment booleanize(const TreeModel& tree, const std::map<std::string, double>& features, Vocabulary& vocab);

std::string classify(const TreeModel& tree, const PartialAssignment& assignment, const Vocabulary& vocab);

/// Instance JSON: {"features":{name:value,...},"label":class}; label optional.
struct FeatureInstance {
    std::map<std::string, double> features;
    std::optional<std::string> label;
};

FeatureInstance load_instance(std::string_view json_text);
FeatureInstance instance_from_json(const Json& j);

}  // namespace contrastix
