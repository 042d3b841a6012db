#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contrastix/formula.hpp"

namespace contrastix {

struct Literal {
    Symbol symbol{};
    bool negative = false;

    [[nodiscard]] Literal dual() const { return Literal{symbol, !negative}; }
    [[nodiscard]] bool holds(const Valuation& v) const {
        bool value = symbol.id < v.size() && v[symbol.id];
        return value != negative;
    }

    // (symbol id, positive < negative)
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Disjunction of literals kept sorted and duplicate-free. The empty clause is Bottom.
class Clause {
public:
    Clause() = default;
    explicit Clause(std::vector<Literal> literals);

    [[nodiscard]] const std::vector<Literal>& literals() const { return literals_; }
    [[nodiscard]] std::size_t size() const { return literals_.size(); }
    [[nodiscard]] bool empty() const { return literals_.empty(); }
    [[nodiscard]] bool is_tautology() const;
    [[nodiscard]] bool contains(Literal l) const;
    [[nodiscard]] bool subsumes(const Clause& other) const;  // this ⊆ other
    [[nodiscard]] bool holds(const Valuation& v) const;

    friend auto operator<=>(const Clause&, const Clause&) = default;

private:
    std::vector<Literal> literals_;
};

/// Conjunction of clauses. The empty set is Top; {{}} is Bottom.
struct CnfFormula {
    std::vector<Clause> clauses;

    [[nodiscard]] bool is_top() const { return clauses.empty(); }
    [[nodiscard]] bool is_bottom() const { return clauses.size() == 1 && clauses[0].empty(); }
    [[nodiscard]] bool holds(const Valuation& v) const;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
    friend auto operator<=>(const CnfFormula&, const CnfFormula&) = default;
};

/// Total literal occurrences.
std::size_t cnf_size(const CnfFormula& cnf);

/// Drops tautologies and duplicates, sorts clauses, and collapses any CNF
/// containing the empty clause to {{}}.
CnfFormula canonicalize(CnfFormula cnf);

/// Removes clauses subsumed by another clause of the formula.
CnfFormula remove_subsumed(CnfFormula cnf);

/// Equivalent canonical CNF by negation normal form and distribution.
CnfFormula to_cnf(const Formula& f);

CnfFormula conjoin(const CnfFormula& a, const CnfFormula& b);

Formula to_formula(const CnfFormula& cnf);
Formula to_formula(const Clause& clause);

/// `true` for Top, `false` for Bottom, otherwise clauses joined by " & ";
/// multi-literal clauses are parenthesized, negative literals carry '!'.
std::string to_string(const CnfFormula& cnf, const Vocabulary& vocab);
std::string to_string(const Clause& clause, const Vocabulary& vocab);

void collect_symbols(const CnfFormula& cnf, std::set<Symbol>& out);

/// Partial map symbol -> {0,1}; doubles as a term.
class PartialAssignment {
public:
    PartialAssignment() = default;

    void bind(Symbol s, bool value) { bindings_[s] = value; }
    [[nodiscard]] std::optional<bool> value(Symbol s) const;
    [[nodiscard]] const std::map<Symbol, bool>& bindings() const { return bindings_; }
    [[nodiscard]] std::size_t size() const { return bindings_.size(); }

    /// Conjunction of unit clauses.
    [[nodiscard]] CnfFormula to_term() const;
    [[nodiscard]] std::vector<Literal> literals() const;
    /// Inverse of to_term; nullopt unless every clause is a unit and no symbol
    /// is bound twice with different values.
    static std::optional<PartialAssignment> from_term(const CnfFormula& cnf);

    friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;

private:
    std::map<Symbol, bool> bindings_;
};

}  // namespace contrastix
