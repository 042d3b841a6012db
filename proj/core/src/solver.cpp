#include "contrastix/solver.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "search.hpp"

namespace contrastix {

namespace {

using detail::Bits;
using detail::SearchOutcome;
using detail::SearchSpec;

Solution error(std::string message) {
    Solution s;
    s.status = SolveStatus::Error;
    s.message = std::move(message);
    return s;
}

Solution with_triple(SolveStatus status, CnfFormula theta, CnfFormula theta_prime, CnfFormula chi, bool optimal) {
    Solution s;
    s.status = status;
    s.has_triple = true;
    s.theta = std::move(theta);
    s.theta_prime = std::move(theta_prime);
    s.chi = std::move(chi);
    s.total_size = cnf_size(s.theta) + cnf_size(s.theta_prime) + cnf_size(s.chi);
    s.chi_size = cnf_size(s.chi);
    s.optimal = optimal;
    return s;
}

// A feasible CNF triple built straight from the inputs, returned when the
// deadline expires before the search proves anything.
std::optional<Solution> incumbent(const ProblemInstance& inst, bool s_satisfiable) {
    CnfFormula theta;
    CnfFormula theta_prime;
    switch (inst.kind) {
        case ProblemKind::SEP: theta = to_cnf(inst.phi); break;
        case ProblemKind::CD: theta = to_cnf(conjoin(inst.s)); break;
        default: theta = to_cnf(inst.target()); break;
    }
    if (inst.kind != ProblemKind::SEP) {
        bool coupled = inst.kind == ProblemKind::CCE || inst.kind == ProblemKind::CD;
        theta_prime = coupled && !s_satisfiable ? CnfFormula{{Clause{}}} : to_cnf(inst.counter_target());
    }
    Solution s = with_triple(SolveStatus::Timeout, std::move(theta), std::move(theta_prime), {}, false);
    if (!verify_solution(inst, s).all_ok()) return std::nullopt;
    s.message = "deadline reached before optimality was proved";
    return s;
}

}  // namespace

ProblemInstance effective_instance(const ProblemInstance& inst, const SolveOptions& opts) {
    ProblemInstance out = inst;
    if (opts.repair && entails(inst.psi, inst.phi)) out.phi = repair_inputs(inst.phi, inst.psi).first;
    return out;
}

Solution search_iterative(const ProblemInstance& original, const SolveOptions& opts) {
    const auto started = std::chrono::steady_clock::now();
    const ProblemInstance inst = effective_instance(original, opts);

    std::set<Symbol> universe_set;
    for (Symbol s : inst.symbols()) universe_set.insert(s);
    std::vector<Symbol> out_vocab = opts.output_vocab ? *opts.output_vocab : inst.symbols();
    universe_set.insert(out_vocab.begin(), out_vocab.end());
    if (universe_set.size() > kSolverVocabLimit)
        throw std::invalid_argument("vocabulary of " + std::to_string(universe_set.size()) +
                                    " symbols exceeds the solver limit of " + std::to_string(kSolverVocabLimit));

    SearchSpec spec;
    spec.universe.assign(universe_set.begin(), universe_set.end());
    for (Symbol s : out_vocab) {
        auto it = std::find(spec.universe.begin(), spec.universe.end(), s);
        spec.output_bits.push_back(static_cast<std::size_t>(it - spec.universe.begin()));
    }
    std::sort(spec.output_bits.begin(), spec.output_bits.end());
    spec.output_bits.erase(std::unique(spec.output_bits.begin(), spec.output_bits.end()), spec.output_bits.end());
    spec.terms = opts.shape == OutputShape::Terms;

    const std::size_t points = std::size_t{1} << spec.universe.size();
    const Bits all(points, true);
    const Bits none(points);
    auto conj_region = [&](const FormulaSet& fs) {
        Bits r = all;
        for (const auto& f : fs) r &= detail::region(f, spec.universe);
        return r;
    };
    const Bits s = conj_region(inst.s);
    const Bits s_prime = conj_region(inst.s_prime);
    const Bits phi = detail::region(inst.phi, spec.universe);
    const Bits psi = detail::region(inst.psi, spec.universe);
    Bits t1 = phi;
    t1.subtract(psi);
    Bits t2 = psi;
    t2.subtract(phi);

    switch (inst.kind) {
        case ProblemKind::CE:
            if (!s.subset_of(t1)) return error("S does not entail phi & !psi");
            if (!s_prime.subset_of(t2)) return error("S' does not entail !phi & psi");
            spec.l1 = s, spec.u1 = t1, spec.l2 = s_prime, spec.u2 = t2;
            break;
        case ProblemKind::GCE:
            spec.l1 = t1, spec.u1 = t1, spec.l2 = t2, spec.u2 = t2;
            break;
        case ProblemKind::SEP: {
            Bits overlap = phi;
            overlap &= psi;
            if (overlap.any()) return error("phi & psi is satisfiable");
            // θ′ and χ stay ⊤: no clause holds everywhere and nothing is excluded.
            spec.l1 = phi, spec.u1 = psi.complement(), spec.l2 = all, spec.u2 = all;
            break;
        }
        case ProblemKind::CCE:
        case ProblemKind::CD: {
            if (s.any() && t2.none()) return error("psi entails phi");
            if (!s.subset_of(t1)) return error("S does not entail phi & !psi");
            spec.l1 = s;
            spec.u1 = inst.kind == ProblemKind::CD ? s : t1;
            if (s.any()) {
                spec.witness_mode = true;
                spec.witnesses = t2;
                spec.l2 = none;
                spec.u2 = t2;
            } else {
                spec.l2 = none;
                spec.u2 = none;
            }
            break;
        }
    }

    detail::SearchControl control;
    control.max_total = opts.max_total;
    control.cegar = opts.strategy == Strategy::Cegar || (opts.strategy == Strategy::Auto && spec.universe.size() > 4);
    if (opts.deadline) control.deadline = started + *opts.deadline;
    control.jobs = opts.jobs;
    control.seed = opts.seed;

    const SearchOutcome outcome = detail::search(spec, control);
    switch (outcome.kind) {
        case SearchOutcome::Kind::Found:
            return with_triple(SolveStatus::Ok, outcome.theta, outcome.theta_prime, outcome.chi, true);
        case SearchOutcome::Kind::Exhausted:
            return error(spec.terms ? "no term-shaped triple exists" : "no triple over the output vocabulary");
        case SearchOutcome::Kind::Bounded: {
            Solution sol;
            sol.status = SolveStatus::Timeout;
            sol.message = "no triple within total size " + std::to_string(*opts.max_total);
            return sol;
        }
        case SearchOutcome::Kind::Timeout: break;
    }
    if (!spec.terms && !opts.output_vocab) {
        if (auto inc = incumbent(inst, s.any())) return *inc;
    }
    Solution sol;
    sol.status = SolveStatus::Timeout;
    sol.message = "deadline reached before any triple was found";
    return sol;
}

Solution solve(const ProblemInstance& inst, const SolveOptions& opts) {
    Solution sol = search_iterative(inst, opts);
    if (sol.has_triple) sol.verification = verify_solution(effective_instance(inst, opts), sol);
    return sol;
}

Solution solve_ce(Vocabulary vocab, FormulaSet s, FormulaSet s_prime, Formula phi, Formula psi,
                  const SolveOptions& opts) {
    return solve(ProblemInstance::ce(std::move(vocab), std::move(s), std::move(s_prime), std::move(phi),
                                     std::move(psi)),
                 opts);
}

Solution solve_gce(Vocabulary vocab, Formula phi, Formula psi, const SolveOptions& opts) {
    return solve(ProblemInstance::gce(std::move(vocab), std::move(phi), std::move(psi)), opts);
}

Solution solve_sep(Vocabulary vocab, Formula phi, Formula psi, const SolveOptions& opts) {
    return solve(ProblemInstance::sep(std::move(vocab), std::move(phi), std::move(psi)), opts);
}

Solution solve_cce(Vocabulary vocab, FormulaSet s, Formula phi, Formula psi, const SolveOptions& opts) {
    return solve(ProblemInstance::cce(std::move(vocab), std::move(s), std::move(phi), std::move(psi)), opts);
}

Solution solve_cd(Vocabulary vocab, FormulaSet s, Formula phi, Formula psi, const SolveOptions& opts) {
    return solve(ProblemInstance::cd(std::move(vocab), std::move(s), std::move(phi), std::move(psi)), opts);
}

}  // namespace contrastix
