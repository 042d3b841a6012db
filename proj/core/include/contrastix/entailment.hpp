#pragma once

#include <optional>
#include <span>

#include "contrastix/cnf.hpp"

namespace contrastix {

using FormulaSet = std::vector<Formula>;

bool is_satisfiable(const Formula& f);
bool is_satisfiable(const CnfFormula& cnf);

/// A model of `premise` that falsifies `conclusion`, if one exists.
/// Refutes the conclusion one clause at a time, so no CNF of its negation is built.
std::optional<Valuation> entailment_counterexample(const CnfFormula& premise, const CnfFormula& conclusion);

/// ∧A ⊨ B
bool entails(std::span<const Formula> premises, const Formula& conclusion);
bool entails(const Formula& premise, const Formula& conclusion);
bool entails(const CnfFormula& premise, const CnfFormula& conclusion);

/// A ⊨ ∧B and B ⊨ ∧A
bool equivalent(std::span<const Formula> a, std::span<const Formula> b);
bool equivalent(const Formula& a, const Formula& b);
bool equivalent(const CnfFormula& a, const CnfFormula& b);

/// φ∧¬ψ ⊨ t and ¬φ∧ψ ⊭ t
bool is_weak_contrast(const Formula& t, const Formula& phi, const Formula& psi);
/// φ∧¬ψ ⊨ t and ¬φ∧ψ ⊨ ¬t
bool is_strong_contrast(const Formula& t, const Formula& phi, const Formula& psi);
/// φ∧¬ψ ⊨ t and ¬φ∧ψ ⊨ t
bool is_likeness(const Formula& t, const Formula& phi, const Formula& psi);

/// The partial assignment defined by `f` over `symbols`, if `f` defines one:
/// f must be satisfiable and equivalent to the conjunction of the literals it entails.
std::optional<PartialAssignment> defined_partial_assignment(const CnfFormula& f, std::span<const Symbol> symbols);

}  // namespace contrastix
