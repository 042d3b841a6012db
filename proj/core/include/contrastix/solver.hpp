#pragma once

#include <stdexcept>

#include "contrastix/problem.hpp"

namespace contrastix {

/// Largest universe (instance symbols plus output vocabulary) the solver accepts.
inline constexpr std::size_t kSolverVocabLimit = 16;

/// The instance actually solved: φ is replaced by φ∧¬ψ when opts.repair is
/// set and ψ ⊨ φ.
ProblemInstance effective_instance(const ProblemInstance& inst, const SolveOptions& opts);

/// Iterative deepening on total size; no verification report is attached.
/// Throws std::invalid_argument when the vocabulary exceeds kSolverVocabLimit.
Solution search_iterative(const ProblemInstance& inst, const SolveOptions& opts = {});

/// search_iterative followed by verify_solution on the effective instance.
Solution solve(const ProblemInstance& inst, const SolveOptions& opts = {});

Solution solve_ce(Vocabulary vocab, FormulaSet s, FormulaSet s_prime, Formula phi, Formula psi,
                  const SolveOptions& opts = {});
Solution solve_gce(Vocabulary vocab, Formula phi, Formula psi, const SolveOptions& opts = {});
Solution solve_sep(Vocabulary vocab, Formula phi, Formula psi, const SolveOptions& opts = {});
Solution solve_cce(Vocabulary vocab, FormulaSet s, Formula phi, Formula psi, const SolveOptions& opts = {});
Solution solve_cd(Vocabulary vocab, FormulaSet s, Formula phi, Formula psi, const SolveOptions& opts = {});

/// Rechecks every condition of the instance's definition with the SAT-based
/// entailment checks and tags each output clause. Clauses are classified
/// against (φ, ψ), or against (∧S, ∧S′) for CE; θ′ uses the reversed pair.
VerificationReport verify_solution(const ProblemInstance& inst, const Solution& sol);

}  // namespace contrastix
