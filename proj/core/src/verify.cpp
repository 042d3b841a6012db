#include <utility>

#include "contrastix/solver.hpp"

namespace contrastix {

namespace {

ClauseTag classify(const Formula& clause, const Formula& a, const Formula& b) {
    if (is_likeness(clause, a, b)) return ClauseTag::Likeness;
    if (is_weak_contrast(clause, a, b)) return ClauseTag::WeakContrast;
    return ClauseTag::NotEntailed;
}

std::vector<ClauseTag> classify_all(const CnfFormula& f, const Formula& a, const Formula& b) {
    std::vector<ClauseTag> tags;
    for (const auto& c : f.clauses) tags.push_back(classify(to_formula(c), a, b));
    return tags;
}

}  // namespace

VerificationReport verify_solution(const ProblemInstance& inst, const Solution& sol) {
    VerificationReport r;
    auto check = [&](std::string name, bool ok) { r.conditions.emplace_back(std::move(name), ok); };

    check("triple present", sol.has_triple);
    if (!sol.has_triple) return r;

    const CnfFormula first = conjoin(sol.theta, sol.chi);
    const CnfFormula second = conjoin(sol.theta_prime, sol.chi);
    const CnfFormula target = to_cnf(inst.target());
    const CnfFormula counter = to_cnf(inst.counter_target());
    const CnfFormula s = to_cnf(conjoin(inst.s));

    check("sizes consistent", sol.total_size == cnf_size(sol.theta) + cnf_size(sol.theta_prime) + cnf_size(sol.chi) &&
                                  sol.chi_size == cnf_size(sol.chi));

    switch (inst.kind) {
        case ProblemKind::CE:
            check("S |= theta & chi", entails(s, first));
            check("theta & chi |= phi & !psi", entails(first, target));
            check("S' |= theta' & chi", entails(to_cnf(conjoin(inst.s_prime)), second));
            check("theta' & chi |= !phi & psi", entails(second, counter));
            break;
        case ProblemKind::GCE:
            check("theta & chi == phi & !psi", equivalent(first, target));
            check("theta' & chi == !phi & psi", equivalent(second, counter));
            break;
        case ProblemKind::SEP:
            check("phi |= theta", entails(to_cnf(inst.phi), sol.theta));
            check("psi |= !theta", !is_satisfiable(conjoin(to_cnf(inst.psi), sol.theta)));
            check("theta' and chi are true", sol.theta_prime.is_top() && sol.chi.is_top());
            break;
        case ProblemKind::CCE:
        case ProblemKind::CD:
            if (inst.kind == ProblemKind::CD)
                check("S == theta & chi", equivalent(s, first));
            else
                check("S |= theta & chi", entails(s, first));
            check("theta & chi |= phi & !psi", entails(first, target));
            check("theta' & chi |= !phi & psi", entails(second, counter));
            check("theta' & chi sat iff S sat", is_satisfiable(second) == is_satisfiable(s));
            break;
    }

    Formula a = inst.phi;
    Formula b = inst.psi;
    if (inst.kind == ProblemKind::CE) {
        a = conjoin(inst.s);
        b = conjoin(inst.s_prime);
    }
    r.theta_tags = classify_all(sol.theta, a, b);
    r.theta_prime_tags = classify_all(sol.theta_prime, b, a);
    r.chi_tags = classify_all(sol.chi, a, b);
    return r;
}

}  // namespace contrastix
