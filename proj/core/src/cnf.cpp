#include "contrastix/cnf.hpp"

#include <algorithm>

namespace contrastix {

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
    std::sort(literals_.begin(), literals_.end());
    literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

bool Clause::is_tautology() const {
    // Sorted by (symbol, polarity), so complementary literals are adjacent.
    for (std::size_t i = 1; i < literals_.size(); ++i)
        if (literals_[i].symbol == literals_[i - 1].symbol) return true;
    return false;
}

bool Clause::contains(Literal l) const { return std::binary_search(literals_.begin(), literals_.end(), l); }

bool Clause::subsumes(const Clause& other) const {
    return std::includes(other.literals_.begin(), other.literals_.end(), literals_.begin(), literals_.end());
}

bool Clause::holds(const Valuation& v) const {
    return std::any_of(literals_.begin(), literals_.end(), [&](Literal l) { return l.holds(v); });
}

bool CnfFormula::holds(const Valuation& v) const {
    return std::all_of(clauses.begin(), clauses.end(), [&](const Clause& c) { return c.holds(v); });
}

std::size_t cnf_size(const CnfFormula& cnf) {
    std::size_t n = 0;
    for (const auto& c : cnf.clauses) n += c.size();
    return n;
}

CnfFormula canonicalize(CnfFormula cnf) {
    std::erase_if(cnf.clauses, [](const Clause& c) { return c.is_tautology(); });
    if (std::any_of(cnf.clauses.begin(), cnf.clauses.end(), [](const Clause& c) { return c.empty(); }))
        return CnfFormula{{Clause{}}};
    std::sort(cnf.clauses.begin(), cnf.clauses.end());
    cnf.clauses.erase(std::unique(cnf.clauses.begin(), cnf.clauses.end()), cnf.clauses.end());
    return cnf;
}

CnfFormula remove_subsumed(CnfFormula cnf) {
    cnf = canonicalize(std::move(cnf));
    // Shorter clauses first so a subsuming clause is always kept before its victims.
    std::stable_sort(cnf.clauses.begin(), cnf.clauses.end(),
                     [](const Clause& a, const Clause& b) { return a.size() < b.size(); });
    std::vector<Clause> kept;
    for (auto& c : cnf.clauses) {
        bool subsumed = std::any_of(kept.begin(), kept.end(), [&](const Clause& k) { return k.subsumes(c); });
        if (!subsumed) kept.push_back(std::move(c));
    }
    return canonicalize(CnfFormula{std::move(kept)});
}

CnfFormula conjoin(const CnfFormula& a, const CnfFormula& b) {
    CnfFormula out = a;
    out.clauses.insert(out.clauses.end(), b.clauses.begin(), b.clauses.end());
    return canonicalize(std::move(out));
}

namespace {

CnfFormula product(const CnfFormula& a, const CnfFormula& b) {
    CnfFormula out;
    for (const auto& x : a.clauses) {
        for (const auto& y : b.clauses) {
            std::vector<Literal> lits = x.literals();
            lits.insert(lits.end(), y.literals().begin(), y.literals().end());
            Clause c(std::move(lits));
            if (!c.is_tautology()) out.clauses.push_back(std::move(c));
        }
    }
    return remove_subsumed(std::move(out));
}

CnfFormula convert(const Formula& f, bool negated) {
    switch (f.kind()) {
        case Formula::Kind::Bottom:
            return negated ? CnfFormula{} : CnfFormula{{Clause{}}};
        case Formula::Kind::Atom:
            return CnfFormula{{Clause({Literal{f.symbol(), negated}})}};
        case Formula::Kind::Not:
            return convert(f.operand(), !negated);
        case Formula::Kind::And:
            if (!negated) return remove_subsumed(conjoin(convert(f.lhs(), false), convert(f.rhs(), false)));
            return product(convert(f.lhs(), true), convert(f.rhs(), true));
        case Formula::Kind::Or:
            if (!negated) return product(convert(f.lhs(), false), convert(f.rhs(), false));
            return remove_subsumed(conjoin(convert(f.lhs(), true), convert(f.rhs(), true)));
    }
    return {};
}

}  // namespace

CnfFormula to_cnf(const Formula& f) { return canonicalize(convert(f, false)); }

Formula to_formula(const Clause& clause) {
    std::vector<Formula> lits;
    for (auto l : clause.literals()) {
        Formula a = Formula::atom(l.symbol);
        lits.push_back(l.negative ? !a : a);
    }
    return disjoin(lits);
}

Formula to_formula(const CnfFormula& cnf) {
    std::vector<Formula> cs;
    for (const auto& c : cnf.clauses) cs.push_back(to_formula(c));
    return conjoin(cs);
}

std::string to_string(const Clause& clause, const Vocabulary& vocab) {
    if (clause.empty()) return "false";
    std::string out;
    for (std::size_t i = 0; i < clause.size(); ++i) {
        if (i) out += " | ";
        if (clause.literals()[i].negative) out += '!';
        out += vocab.name(clause.literals()[i].symbol);
    }
    return out;
}

std::string to_string(const CnfFormula& cnf, const Vocabulary& vocab) {
    if (cnf.is_top()) return "true";
    if (cnf.is_bottom()) return "false";
    std::string out;
    for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
        if (i) out += " & ";
        const auto& c = cnf.clauses[i];
        if (c.size() > 1) {
            out += '(' + to_string(c, vocab) + ')';
        } else {
            out += to_string(c, vocab);
        }
    }
    return out;
}

void collect_symbols(const CnfFormula& cnf, std::set<Symbol>& out) {
    for (const auto& c : cnf.clauses)
        for (auto l : c.literals()) out.insert(l.symbol);
}

std::optional<bool> PartialAssignment::value(Symbol s) const {
    if (auto it = bindings_.find(s); it != bindings_.end()) return it->second;
    return std::nullopt;
}

std::vector<Literal> PartialAssignment::literals() const {
    std::vector<Literal> out;
    for (auto [s, v] : bindings_) out.push_back(Literal{s, !v});
    return out;
}

CnfFormula PartialAssignment::to_term() const {
    CnfFormula out;
    for (auto l : literals()) out.clauses.push_back(Clause({l}));
    return canonicalize(std::move(out));
}

std::optional<PartialAssignment> PartialAssignment::from_term(const CnfFormula& cnf) {
    PartialAssignment pa;
    for (const auto& c : cnf.clauses) {
        if (c.size() != 1) return std::nullopt;
        Literal l = c.literals()[0];
        if (auto v = pa.value(l.symbol); v && *v == l.negative) return std::nullopt;
        pa.bind(l.symbol, !l.negative);
    }
    return pa;
}

}  // namespace contrastix
