#include "contrastix/problem.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace contrastix {

std::string_view to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::CE: return "ce";
        case ProblemKind::GCE: return "gce";
        case ProblemKind::SEP: return "sep";
        case ProblemKind::CCE: return "cce";
        case ProblemKind::CD: return "cd";
    }
    return "?";
}

ProblemKind parse_problem_kind(std::string_view text) {
    for (auto k : {ProblemKind::CE, ProblemKind::GCE, ProblemKind::SEP, ProblemKind::CCE, ProblemKind::CD})
        if (to_string(k) == text) return k;
    throw std::invalid_argument("unknown problem kind '" + std::string(text) + "'");
}

std::string_view to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Ok: return "ok";
        case SolveStatus::Error: return "error";
        case SolveStatus::Timeout: return "timeout";
    }
    return "?";
}

std::string_view to_string(ClauseTag tag) {
    switch (tag) {
        case ClauseTag::WeakContrast: return "weak_contrast";
        case ClauseTag::Likeness: return "likeness";
        case ClauseTag::NotEntailed: return "not_entailed";
    }
    return "?";
}

ProblemInstance ProblemInstance::ce(Vocabulary vocab, FormulaSet s, FormulaSet s_prime, Formula phi, Formula psi) {
    return ProblemInstance{ProblemKind::CE, std::move(vocab), std::move(s), std::move(s_prime), std::move(phi),
                           std::move(psi)};
}

ProblemInstance ProblemInstance::gce(Vocabulary vocab, Formula phi, Formula psi) {
    return ProblemInstance{ProblemKind::GCE, std::move(vocab), {}, {}, std::move(phi), std::move(psi)};
}

ProblemInstance ProblemInstance::sep(Vocabulary vocab, Formula phi, Formula psi) {
    return ProblemInstance{ProblemKind::SEP, std::move(vocab), {}, {}, std::move(phi), std::move(psi)};
}

ProblemInstance ProblemInstance::cce(Vocabulary vocab, FormulaSet s, Formula phi, Formula psi) {
    return ProblemInstance{ProblemKind::CCE, std::move(vocab), std::move(s), {}, std::move(phi), std::move(psi)};
}

ProblemInstance ProblemInstance::cd(Vocabulary vocab, FormulaSet s, Formula phi, Formula psi) {
    return ProblemInstance{ProblemKind::CD, std::move(vocab), std::move(s), {}, std::move(phi), std::move(psi)};
}

bool ProblemInstance::uses_s() const {
    return kind == ProblemKind::CE || kind == ProblemKind::CCE || kind == ProblemKind::CD;
}

std::vector<Symbol> ProblemInstance::symbols() const {
    std::set<Symbol> acc;
    collect_symbols(phi, acc);
    collect_symbols(psi, acc);
    for (const auto& f : s) collect_symbols(f, acc);
    for (const auto& f : s_prime) collect_symbols(f, acc);
    return {acc.begin(), acc.end()};
}

bool VerificationReport::all_ok() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.second; });
}

std::optional<bool> VerificationReport::condition(std::string_view name) const {
    for (const auto& [n, ok] : conditions)
        if (n == name) return ok;
    return std::nullopt;
}

std::pair<Formula, Formula> repair_inputs(const Formula& phi, const Formula& psi) { return {phi && !psi, psi}; }

bool cnf_solution_exists(const ProblemInstance& inst, std::string* reason) {
    auto fail = [&](std::string why) {
        if (reason) *reason = std::move(why);
        return false;
    };
    const Formula target = inst.target();
    const Formula counter = inst.counter_target();
    switch (inst.kind) {
        case ProblemKind::GCE: return true;
        case ProblemKind::SEP:
            if (is_satisfiable(inst.phi && inst.psi)) return fail("phi & psi is satisfiable");
            return true;
        case ProblemKind::CE:
            if (!entails(inst.s, target)) return fail("S does not entail phi & !psi");
            if (!entails(inst.s_prime, counter)) return fail("S' does not entail !phi & psi");
            return true;
        case ProblemKind::CCE:
        case ProblemKind::CD: {
            // ¬φ∧ψ is unsatisfiable exactly when ψ ⊨ φ.
            if (is_satisfiable(conjoin(inst.s)) && !is_satisfiable(counter)) return fail("psi entails phi");
            if (!entails(inst.s, target)) return fail("S does not entail phi & !psi");
            return true;
        }
    }
    return true;
}

}  // namespace contrastix
