#include "contrastix/ingest.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace contrastix {

namespace {

const Json& require(const Json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key)) throw TreeFormatError(std::string(where) + ": missing \"" + key + "\"");
    return j.at(key);
}

std::string require_string(const Json& j, const char* key, const char* where) {
    const Json& v = require(j, key, where);
    if (!v.is_string()) throw TreeFormatError(std::string(where) + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw TreeFormatError(std::string("invalid JSON: ") + e.what());
    }
}

class TreeBuilder {
public:
    explicit TreeBuilder(TreeModel& tree) : tree_(tree) {}

    void pivots(const Json& arr) {
        if (!arr.is_array()) throw TreeFormatError("pivots: must be an array");
        for (const auto& p : arr) {
            Pivot pivot{require_string(p, "id", "pivot"), require_string(p, "feature", "pivot"), 0.0};
            if (require_string(p, "op", "pivot") != "<=")
                throw TreeFormatError("pivot " + pivot.id + ": only \"<=\" is supported");
            const Json& t = require(p, "threshold", "pivot");
            if (!t.is_number()) throw TreeFormatError("pivot " + pivot.id + ": threshold must be a number");
            pivot.threshold = t.get<double>();
            if (by_id_.count(pivot.id)) throw TreeFormatError("duplicate pivot id " + pivot.id);
            auto same = std::find_if(tree_.pivots.begin(), tree_.pivots.end(), [&](const Pivot& q) {
                return q.feature == pivot.feature && q.threshold == pivot.threshold;
            });
            if (same != tree_.pivots.end()) {
                by_id_[pivot.id] = static_cast<std::size_t>(same - tree_.pivots.begin());
                continue;
            }
            by_id_[pivot.id] = tree_.pivots.size();
            tree_.pivots.push_back(std::move(pivot));
        }
    }

    std::size_t node(const Json& j) {
        if (!j.is_object()) throw TreeFormatError("node: must be an object");
        TreeNode n;
        if (j.contains("leaf")) {
            n.is_leaf = true;
            n.label = require_string(j, "leaf", "leaf");
            if (!tree_.has_class(n.label)) throw TreeFormatError("leaf names unknown class " + n.label);
        } else {
            std::string id = require_string(j, "pivot", "node");
            auto it = by_id_.find(id);
            if (it == by_id_.end()) throw TreeFormatError("node references undeclared pivot " + id);
            n.pivot = it->second;
            n.on_true = node(require(j, "true", "node"));
            n.on_false = node(require(j, "false", "node"));
        }
        tree_.nodes.push_back(std::move(n));
        return tree_.nodes.size() - 1;
    }

private:
    TreeModel& tree_;
    std::unordered_map<std::string, std::size_t> by_id_;
};

}  // namespace

bool TreeModel::has_class(std::string_view c) const { return std::find(classes.begin(), classes.end(), c) != classes.end(); }

TreeModel load_tree(std::string_view json_text) { return tree_from_json(parse_json(json_text)); }

TreeModel tree_from_json(const Json& j) {
    TreeModel tree;
    const Json& classes = require(j, "classes", "tree");
    if (!classes.is_array()) throw TreeFormatError("classes: must be an array");
    for (const auto& c : classes) {
        if (!c.is_string()) throw TreeFormatError("classes: entries must be strings");
        tree.classes.push_back(c.get<std::string>());
    }
    TreeBuilder builder(tree);
    builder.pivots(j.contains("pivots") ? j.at("pivots") : Json::array());
    tree.root = builder.node(require(j, "root", "tree"));
    return tree;
}

std::vector<Symbol> pivot_symbols(const TreeModel& tree, Vocabulary& vocab) {
    std::vector<Symbol> out;
    for (const auto& p : tree.pivots) out.push_back(vocab.intern(p.id));
    return out;
}

Formula class_formula(const TreeModel& tree, std::string_view cls, Vocabulary& vocab) {
    if (!tree.has_class(cls)) throw std::invalid_argument("unknown class " + std::string(cls));
    const std::vector<Symbol> syms = pivot_symbols(tree, vocab);
    std::vector<Formula> paths;
    std::vector<Formula> branch;
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        const TreeNode& n = tree.nodes[i];
        if (n.is_leaf) {
            if (n.label == cls) paths.push_back(conjoin(branch));
            return;
        }
        branch.push_back(Formula::atom(syms[n.pivot]));
        walk(n.on_true);
        branch.back() = !Formula::atom(syms[n.pivot]);
        walk(n.on_false);
        branch.pop_back();
    };
    walk(tree.root);
    return disjoin(paths);
}

PartialAssignment booleanize(const TreeModel& tree, const std::map<std::string, double>& features, Vocabulary& vocab) {
    const std::vector<Symbol> syms = pivot_symbols(tree, vocab);
    PartialAssignment a;
    for (std::size_t i = 0; i < tree.pivots.size(); ++i) {
        auto it = features.find(tree.pivots[i].feature);
        if (it == features.end()) throw std::invalid_argument("missing feature " + tree.pivots[i].feature);
        a.bind(syms[i], it->second <= tree.pivots[i].threshold);
    }
    return a;
}

std::string classify(const TreeModel& tree, const PartialAssignment& assignment, const Vocabulary& vocab) {
    std::size_t i = tree.root;
    while (!tree.nodes[i].is_leaf) {
        const std::string& id = tree.pivots[tree.nodes[i].pivot].id;
        auto sym = vocab.find(id);
        std::optional<bool> v = sym ? assignment.value(*sym) : std::nullopt;
        if (!v) throw std::invalid_argument("assignment does not bind pivot " + id);
        i = *v ? tree.nodes[i].on_true : tree.nodes[i].on_false;
    }
    return tree.nodes[i].label;
}

FeatureInstance load_instance(std::string_view json_text) { return instance_from_json(parse_json(json_text)); }

FeatureInstance instance_from_json(const Json& j) {
    FeatureInstance inst;
    const Json& features = require(j, "features", "instance");
    if (!features.is_object()) throw TreeFormatError("instance: \"features\" must be an object");
    for (const auto& [name, value] : features.items()) {
        if (!value.is_number()) throw TreeFormatError("instance: feature " + name + " must be a number");
        inst.features[name] = value.get<double>();
    }
    if (j.contains("label") && j["label"].is_string()) inst.label = j["label"].get<std::string>();
    return inst;
}

}  // namespace contrastix
