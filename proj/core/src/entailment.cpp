#include "contrastix/entailment.hpp"

#include "contrastix/sat.hpp"

namespace contrastix {

bool is_satisfiable(const CnfFormula& cnf) { return find_model(cnf).has_value(); }

bool is_satisfiable(const Formula& f) { return is_satisfiable(to_cnf(f)); }

std::optional<Valuation> entailment_counterexample(const CnfFormula& premise, const CnfFormula& conclusion) {
    for (const auto& clause : conclusion.clauses) {
        CnfFormula query = premise;
        for (auto l : clause.literals()) query.clauses.push_back(Clause({l.dual()}));
        if (auto model = find_model(query)) return model;
    }
    return std::nullopt;
}

bool entails(const CnfFormula& premise, const CnfFormula& conclusion) {
    return !entailment_counterexample(premise, conclusion).has_value();
}

bool entails(std::span<const Formula> premises, const Formula& conclusion) {
    return entails(to_cnf(conjoin(premises)), to_cnf(conclusion));
}

bool entails(const Formula& premise, const Formula& conclusion) { return entails(to_cnf(premise), to_cnf(conclusion)); }

bool equivalent(std::span<const Formula> a, std::span<const Formula> b) {
    CnfFormula ca = to_cnf(conjoin(a));
    CnfFormula cb = to_cnf(conjoin(b));
    return entails(ca, cb) && entails(cb, ca);
}

bool equivalent(const Formula& a, const Formula& b) {
    CnfFormula ca = to_cnf(a);
    CnfFormula cb = to_cnf(b);
    return entails(ca, cb) && entails(cb, ca);
}

bool equivalent(const CnfFormula& a, const CnfFormula& b) { return entails(a, b) && entails(b, a); }

bool is_weak_contrast(const Formula& t, const Formula& phi, const Formula& psi) {
    return entails(phi && !psi, t) && !entails(!phi && psi, t);
}

bool is_strong_contrast(const Formula& t, const Formula& phi, const Formula& psi) {
    return entails(phi && !psi, t) && entails(!phi && psi, !t);
}

bool is_likeness(const Formula& t, const Formula& phi, const Formula& psi) {
    return entails(phi && !psi, t) && entails(!phi && psi, t);
}

std::optional<PartialAssignment> defined_partial_assignment(const CnfFormula& f, std::span<const Symbol> symbols) {
    if (!is_satisfiable(f)) return std::nullopt;
    PartialAssignment pa;
    for (Symbol s : symbols) {
        CnfFormula pos{{Clause({Literal{s, false}})}};
        CnfFormula neg{{Clause({Literal{s, true}})}};
        if (entails(f, pos)) {
            pa.bind(s, true);
        } else if (entails(f, neg)) {
            pa.bind(s, false);
        }
    }
    if (!entails(pa.to_term(), f)) return std::nullopt;
    return pa;
}

}  // namespace contrastix
