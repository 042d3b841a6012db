#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "contrastix/cnf.hpp"
#include "contrastix/entailment.hpp"

namespace contrastix {

enum class ProblemKind { CE, GCE, SEP, CCE, CD };

std::string_view to_string(ProblemKind kind);
ProblemKind parse_problem_kind(std::string_view text);

/// Inputs of one of the five explanation problems. S is used by CE, CCE and
/// CD; S' only by CE.
struct ProblemInstance {
    ProblemKind kind = ProblemKind::GCE;
    Vocabulary vocab;
    FormulaSet s;
    FormulaSet s_prime;
    Formula phi;
    Formula psi;

    static ProblemInstance ce(Vocabulary vocab, FormulaSet s, FormulaSet s_prime, Formula phi, Formula psi);
    static ProblemInstance gce(Vocabulary vocab, Formula phi, Formula psi);
    static ProblemInstance sep(Vocabulary vocab, Formula phi, Formula psi);
    static ProblemInstance cce(Vocabulary vocab, FormulaSet s, Formula phi, Formula psi);
    static ProblemInstance cd(Vocabulary vocab, FormulaSet s, Formula phi, Formula psi);

    [[nodiscard]] bool uses_s() const;
    [[nodiscard]] bool uses_s_prime() const { return kind == ProblemKind::CE; }
    /// φ∧¬ψ
    [[nodiscard]] Formula target() const { return phi && !psi; }
    /// ¬φ∧ψ
    [[nodiscard]] Formula counter_target() const { return !phi && psi; }
    /// Symbols occurring in any input formula, ascending by id.
    [[nodiscard]] std::vector<Symbol> symbols() const;
};

enum class OutputShape { Cnf, Terms };
enum class Strategy { Auto, Exhaustive, Cegar };

struct SolveOptions {
    OutputShape shape = OutputShape::Cnf;
    std::optional<std::size_t> max_total;
    Strategy strategy = Strategy::Auto;
    std::optional<std::chrono::milliseconds> deadline;
    bool repair = false;
    /// Symbols the outputs may use; defaults to the instance symbols.
    std::optional<std::vector<Symbol>> output_vocab;
    unsigned jobs = 1;
    /// Seeds the initial counterexample sample of the CEGAR strategy. Affects
    /// the number of refinement rounds only, never the answer.
    std::uint64_t seed = 0;
};

enum class SolveStatus { Ok, Error, Timeout };

std::string_view to_string(SolveStatus status);

enum class ClauseTag { WeakContrast, Likeness, NotEntailed };

std::string_view to_string(ClauseTag tag);

struct VerificationReport {
    std::vector<std::pair<std::string, bool>> conditions;
    std::vector<ClauseTag> theta_tags;
    std::vector<ClauseTag> theta_prime_tags;
    std::vector<ClauseTag> chi_tags;

    [[nodiscard]] bool all_ok() const;
    [[nodiscard]] std::optional<bool> condition(std::string_view name) const;
};

struct Solution {
    SolveStatus status = SolveStatus::Error;
    /// False when no triple is reported (error, or timeout before any verified triple).
    bool has_triple = false;
    CnfFormula theta;
    CnfFormula theta_prime;
    CnfFormula chi;
    std::size_t total_size = 0;
    std::size_t chi_size = 0;
    bool optimal = false;
    std::string message;
    std::optional<VerificationReport> verification;

    friend bool operator==(const Solution& a, const Solution& b) {
        return a.status == b.status && a.has_triple == b.has_triple && a.theta == b.theta &&
               a.theta_prime == b.theta_prime && a.chi == b.chi && a.total_size == b.total_size &&
               a.chi_size == b.chi_size && a.optimal == b.optimal && a.message == b.message;
    }
};

/// (φ∧¬ψ, ψ): makes the two inputs disjoint while keeping the question.
std::pair<Formula, Formula> repair_inputs(const Formula& phi, const Formula& psi);

/// Whether some CNF triple satisfies the first condition(s) of the problem's
/// definition, decided semantically. `reason` receives a short explanation
/// when it does not.
bool cnf_solution_exists(const ProblemInstance& inst, std::string* reason = nullptr);

}  // namespace contrastix
