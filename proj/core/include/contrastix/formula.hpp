#pragma once

#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "contrastix/vocabulary.hpp"

namespace contrastix {

/// Total valuation indexed by symbol id. Symbols beyond the end read as false.
using Valuation = std::vector<bool>;

/// Immutable propositional formula over the constructors
/// Bottom | Atom | Not | And | Or. Copies share structure.
class Formula {
public:
    enum class Kind { Bottom, Atom, Not, And, Or };

    Formula();  // Bottom

    static Formula bottom();
    static Formula top();  // Not(Bottom)
    static Formula atom(Symbol s);
    static Formula negation(Formula f);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);

    [[nodiscard]] Kind kind() const { return node_->kind; }
    [[nodiscard]] Symbol symbol() const { return node_->symbol; }
    [[nodiscard]] const Formula& operand() const { return node_->children[0]; }
    [[nodiscard]] const Formula& lhs() const { return node_->children[0]; }
    [[nodiscard]] const Formula& rhs() const { return node_->children[1]; }

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node {
        Kind kind = Kind::Bottom;
        Symbol symbol{};
        std::vector<Formula> children;
    };
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

inline Formula operator!(Formula f) { return Formula::negation(std::move(f)); }
inline Formula operator&&(Formula a, Formula b) { return Formula::conjunction(std::move(a), std::move(b)); }
inline Formula operator||(Formula a, Formula b) { return Formula::disjunction(std::move(a), std::move(b)); }

/// Number of atom occurrences; size(Bottom) = 0 and negation is free.
std::size_t size(const Formula& f);

bool evaluate(const Formula& f, const Valuation& v);

/// Symbols occurring in f, added to `out`.
void collect_symbols(const Formula& f, std::set<Symbol>& out);

/// Conjunction of all formulas; Top for an empty list.
Formula conjoin(std::span<const Formula> fs);
/// Disjunction of all formulas; Bottom for an empty list.
Formula disjoin(std::span<const Formula> fs);

/// Rendering in the input grammar with minimal parentheses; parsing the
/// result yields the same tree.
std::string to_string(const Formula& f, const Vocabulary& vocab);

}  // namespace contrastix
