#include "contrastix/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace contrastix {

namespace {

using Clock = std::chrono::steady_clock;

// One bit per valuation of the local symbols.
class Table {
public:
    Table() = default;
    Table(std::size_t points, bool filled) : points_(points), words_((points + 63) / 64, filled ? ~0ULL : 0ULL) {
        trim();
    }

    void set(std::size_t i) { words_[i / 64] |= 1ULL << (i % 64); }
    [[nodiscard]] bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1ULL; }

    Table& operator&=(const Table& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    [[nodiscard]] Table operator&(const Table& o) const {
        Table r = *this;
        r &= o;
        return r;
    }
    [[nodiscard]] Table operator~() const {
        Table r = *this;
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }
    [[nodiscard]] bool subset_of(const Table& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    [[nodiscard]] bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    [[nodiscard]] bool disjoint(const Table& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return false;
        return true;
    }
    void assign_and(const Table& a, const Table& b) {
        points_ = a.points_;
        words_.resize(a.words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & b.words_[i];
    }

    friend bool operator==(const Table&, const Table&) = default;

private:
    void trim() {
        if (points_ % 64 != 0 && !words_.empty()) words_.back() &= (1ULL << (points_ % 64)) - 1;
    }

    std::size_t points_ = 0;
    std::vector<std::uint64_t> words_;
};

class Universe {
public:
    explicit Universe(std::vector<Symbol> symbols) : symbols_(std::move(symbols)), points_(1ULL << symbols_.size()) {
        std::uint32_t max_id = 0;
        for (Symbol s : symbols_) max_id = std::max(max_id, s.id + 1);
        width_ = max_id;
    }

    [[nodiscard]] std::size_t points() const { return points_; }
    [[nodiscard]] const std::vector<Symbol>& symbols() const { return symbols_; }
    [[nodiscard]] Table full() const { return Table(points_, true); }
    [[nodiscard]] Table empty() const { return Table(points_, false); }

    [[nodiscard]] Valuation valuation(std::size_t mask) const {
        Valuation v(width_, false);
        for (std::size_t i = 0; i < symbols_.size(); ++i) v[symbols_[i].id] = (mask >> i) & 1U;
        return v;
    }

    [[nodiscard]] Table table(const Formula& f) const {
        Table t = empty();
        for (std::size_t m = 0; m < points_; ++m)
            if (evaluate(f, valuation(m))) t.set(m);
        return t;
    }
    [[nodiscard]] Table table(std::span<const Formula> fs) const {
        Table t = full();
        for (const auto& f : fs) t &= table(f);
        return t;
    }
    [[nodiscard]] Table table(const Clause& c) const {
        Table t = empty();
        for (std::size_t m = 0; m < points_; ++m)
            if (c.holds(valuation(m))) t.set(m);
        return t;
    }
    [[nodiscard]] Table table(const PartialAssignment& pa) const {
        Table t = empty();
        for (std::size_t m = 0; m < points_; ++m) {
            Valuation v = valuation(m);
            bool ok = true;
            for (const auto& [sym, value] : pa.bindings()) ok = ok && (v[sym.id] == value);
            if (ok) t.set(m);
        }
        return t;
    }

    /// Every tautology-free clause with at most `max_len` literals, in canonical order.
    [[nodiscard]] std::vector<Clause> clauses(std::size_t max_len) const {
        std::vector<Clause> out;
        std::size_t n = symbols_.size();
        std::vector<int> digit(n, 0);  // 0 absent, 1 positive, 2 negative
        while (true) {
            std::vector<Literal> lits;
            for (std::size_t i = 0; i < n; ++i)
                if (digit[i] != 0) lits.push_back(Literal{symbols_[i], digit[i] == 2});
            if (lits.size() <= max_len) out.emplace_back(std::move(lits));
            std::size_t i = 0;
            while (i < n && digit[i] == 2) digit[i++] = 0;
            if (i == n) break;
            ++digit[i];
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::vector<Symbol> symbols_;
    std::size_t points_;
    std::uint32_t width_ = 0;
};

class Guard {
public:
    explicit Guard(std::chrono::milliseconds budget) : end_(Clock::now() + budget) {}
    void tick() {
        if ((++ticks_ & 0xFFFU) == 0 && Clock::now() > end_) throw BudgetExceeded("oracle deadline exceeded");
    }

private:
    Clock::time_point end_;
    std::uint64_t ticks_ = 0;
};

struct Entry {
    Clause clause;
    Table table;
};

// Walks every canonical CNF of exactly a given size drawn from a canonically
// ordered clause pool. The visitor sees the chosen indices and the model table
// of the chosen clauses intersected with a start table.
class SubsetWalker {
public:
    SubsetWalker(const std::vector<Entry>& pool, bool consistent_units, Guard& guard)
        : pool_(pool), consistent_units_(consistent_units), guard_(guard) {
        for (std::size_t i = 0; i < pool_.size(); ++i)
            if (pool_[i].clause.empty()) empty_index_ = i;
    }

    template <class Visit, class Keep>
    void walk(std::size_t target, const Table& start, Keep&& keep, Visit&& visit) {
        chosen_.clear();
        if (target == 0) {
            visit(chosen_, start);
            if (empty_index_) {
                chosen_.push_back(*empty_index_);
                Table none(start);
                none &= pool_[*empty_index_].table;
                visit(chosen_, none);
                chosen_.clear();
            }
            return;
        }
        levels_.assign(target + 1, start);
        used_.clear();
        dfs(0, target, 0, keep, visit);
    }

    template <class Visit>
    void walk(std::size_t target, const Table& start, Visit&& visit) {
        walk(target, start, [](const Table&) { return true; }, visit);
    }

    [[nodiscard]] CnfFormula formula(const std::vector<std::size_t>& idx) const {
        CnfFormula f;
        for (auto i : idx) f.clauses.push_back(pool_[i].clause);
        return f;
    }

private:
    template <class Keep, class Visit>
    void dfs(std::size_t from, std::size_t remaining, std::size_t depth, Keep& keep, Visit& visit) {
        guard_.tick();
        if (remaining == 0) {
            visit(chosen_, levels_[depth]);
            return;
        }
        for (std::size_t i = from; i < pool_.size(); ++i) {
            const Clause& c = pool_[i].clause;
            if (c.empty() || c.size() > remaining) continue;
            if (consistent_units_ && used_.count(c.literals()[0].dual())) continue;
            levels_[depth + 1].assign_and(levels_[depth], pool_[i].table);
            if (!keep(levels_[depth + 1])) continue;
            chosen_.push_back(i);
            if (consistent_units_) used_.insert(c.literals()[0]);
            dfs(i + 1, remaining - c.size(), depth + 1, keep, visit);
            if (consistent_units_) used_.erase(c.literals()[0]);
            chosen_.pop_back();
        }
    }

    const std::vector<Entry>& pool_;
    bool consistent_units_;
    Guard& guard_;
    std::optional<std::size_t> empty_index_;
    std::vector<std::size_t> chosen_;
    std::vector<Table> levels_;
    std::set<Literal> used_;
};

std::vector<Entry> make_pool(const Universe& u, const std::vector<Clause>& clauses, const std::vector<Table>& must_hold) {
    std::vector<Entry> pool;
    for (const auto& c : clauses) {
        Table t = u.table(c);
        bool ok = std::all_of(must_hold.begin(), must_hold.end(), [&](const Table& m) { return m.subset_of(t); });
        if (ok) pool.push_back(Entry{c, std::move(t)});
    }
    return pool;
}

OptimalSet make_result(OptimalSet::Status status, std::string message) {
    OptimalSet r;
    r.status = status;
    r.message = std::move(message);
    return r;
}

}  // namespace

bool OptimalSet::contains(const Triple& t) const { return std::find(optima.begin(), optima.end(), t) != optima.end(); }

void enumerate_cnf(std::span<const Symbol> vocab, std::size_t max_size,
                   const std::function<void(const CnfFormula&)>& visit, const EnumerationBudget& budget) {
    if (vocab.size() > std::min(budget.max_vocab, EnumerationBudget::kVocabCap))
        throw BudgetExceeded("vocabulary exceeds the enumeration budget");
    Guard guard(budget.deadline);
    Universe u({vocab.begin(), vocab.end()});
    std::vector<Entry> pool;
    for (auto& c : u.clauses(max_size)) pool.push_back(Entry{std::move(c), Table(u.points(), true)});
    SubsetWalker walker(pool, false, guard);
    for (std::size_t size = 0; size <= max_size; ++size)
        walker.walk(size, u.full(), [&](const std::vector<std::size_t>& idx, const Table&) { visit(walker.formula(idx)); });
}

std::vector<CnfFormula> enumerate_cnf(std::span<const Symbol> vocab, std::size_t max_size,
                                      const EnumerationBudget& budget) {
    std::vector<CnfFormula> out;
    enumerate_cnf(vocab, max_size, [&](const CnfFormula& f) { out.push_back(f); }, budget);
    return out;
}

OptimalSet oracle_solve(const ProblemInstance& inst, const EnumerationBudget& budget, OutputShape shape) {
    using Status = OptimalSet::Status;
    const std::vector<Symbol> symbols = inst.symbols();
    const std::size_t n = symbols.size();
    if (n > std::min(budget.max_vocab, EnumerationBudget::kVocabCap))
        return make_result(Status::BudgetExceeded, "vocabulary of " + std::to_string(n) + " symbols exceeds budget");

    Universe u(symbols);
    const Table s = u.table(inst.s);
    const Table s_prime = u.table(inst.s_prime);
    const Table phi = u.table(inst.phi);
    const Table psi = u.table(inst.psi);
    const Table t1 = phi & ~psi;
    const Table t2 = ~phi & psi;
    const ProblemKind kind = inst.kind;

    switch (kind) {
        case ProblemKind::GCE: break;
        case ProblemKind::SEP:
            if (!phi.disjoint(psi)) return make_result(Status::Error, "phi & psi is satisfiable");
            break;
        case ProblemKind::CE:
            if (!s.subset_of(t1)) return make_result(Status::Error, "S does not entail phi & !psi");
            if (!s_prime.subset_of(t2)) return make_result(Status::Error, "S' does not entail !phi & psi");
            break;
        case ProblemKind::CCE:
        case ProblemKind::CD:
            if (!s.none() && t2.none()) return make_result(Status::Error, "psi entails phi");
            if (!s.subset_of(t1)) return make_result(Status::Error, "S does not entail phi & !psi");
            break;
    }

    // Clause-level necessary conditions: every clause of θ (and of χ) must
    // hold on the lower bound of θ∧χ; likewise for θ′ where one exists.
    const Table lower1 = kind == ProblemKind::GCE ? t1 : kind == ProblemKind::SEP ? phi : s;
    std::vector<Table> theta_need{lower1};
    std::vector<Table> chi_need{lower1};
    std::vector<Table> theta_prime_need;
    if (kind == ProblemKind::CE) {
        chi_need.push_back(s_prime);
        theta_prime_need.push_back(s_prime);
    } else if (kind == ProblemKind::GCE) {
        chi_need.push_back(t2);
        theta_prime_need.push_back(t2);
    }

    const bool terms = shape == OutputShape::Terms;
    std::vector<Clause> all = u.clauses(terms ? 1 : n);
    if (terms) std::erase_if(all, [](const Clause& c) { return c.empty(); });
    std::vector<Entry> theta_pool = make_pool(u, all, theta_need);
    std::vector<Entry> chi_pool = kind == ProblemKind::SEP ? std::vector<Entry>{} : make_pool(u, all, chi_need);
    std::vector<Entry> theta_prime_pool =
        kind == ProblemKind::SEP ? std::vector<Entry>{} : make_pool(u, all, theta_prime_need);

    auto first_ok = [&](const Table& tc) {
        switch (kind) {
            case ProblemKind::CE:
            case ProblemKind::CCE: return s.subset_of(tc) && tc.subset_of(t1);
            case ProblemKind::GCE: return tc == t1;
            case ProblemKind::CD: return tc == s && tc.subset_of(t1);
            case ProblemKind::SEP: return phi.subset_of(tc) && tc.disjoint(psi);
        }
        return false;
    };
    auto second_ok = [&](const Table& t) {
        switch (kind) {
            case ProblemKind::CE: return s_prime.subset_of(t) && t.subset_of(t2);
            case ProblemKind::GCE: return t == t2;
            case ProblemKind::CCE:
            case ProblemKind::CD: return t.subset_of(t2) && t.none() == s.none();
            case ProblemKind::SEP: return true;
        }
        return false;
    };
    // θ′∧χ only shrinks as clauses are added, so once it is empty it stays empty.
    const bool need_nonempty = (kind == ProblemKind::CCE || kind == ProblemKind::CD) && !s.none();
    auto keep_second = [&](const Table& t) { return !need_nonempty || !t.none(); };

    Guard guard(budget.deadline);
    SubsetWalker theta_walk(theta_pool, terms, guard);
    SubsetWalker chi_walk(chi_pool, terms, guard);
    SubsetWalker theta_prime_walk(theta_prime_pool, terms, guard);

    const std::size_t term_limit = 3 * n;
    const std::size_t limit = terms ? std::min(budget.max_total_size, term_limit) : budget.max_total_size;
    try {
        for (std::size_t k = 0; k <= limit; ++k) {
            std::vector<Triple> found;
            std::size_t chi_size = 0;
            for (std::size_t b = k + 1; b-- > 0 && found.empty();) {
                for (std::size_t a = 0; a + b <= k; ++a) {
                    const std::size_t r = k - a - b;
                    if (kind == ProblemKind::SEP && (b > 0 || r > 0)) continue;
                    theta_walk.walk(a, u.full(), [&](const std::vector<std::size_t>& ti, const Table& tt) {
                        CnfFormula theta = theta_walk.formula(ti);
                        chi_walk.walk(b, u.full(), [&](const std::vector<std::size_t>& ci, const Table& ct) {
                            if (!first_ok(tt & ct)) return;
                            CnfFormula chi = chi_walk.formula(ci);
                            if (kind == ProblemKind::SEP) {
                                found.push_back(Triple{theta, CnfFormula{}, chi});
                                return;
                            }
                            theta_prime_walk.walk(r, ct, keep_second,
                                                  [&](const std::vector<std::size_t>& pi, const Table& pt) {
                                                      if (second_ok(pt))
                                                          found.push_back(
                                                              Triple{theta, theta_prime_walk.formula(pi), chi});
                                                  });
                        });
                    });
                }
                if (!found.empty()) chi_size = b;
            }
            if (!found.empty()) {
                std::sort(found.begin(), found.end());
                found.erase(std::unique(found.begin(), found.end()), found.end());
                OptimalSet r;
                r.status = Status::Ok;
                r.total_size = k;
                r.chi_size = chi_size;
                r.optima = std::move(found);
                return r;
            }
        }
    } catch (const BudgetExceeded& e) {
        return make_result(Status::BudgetExceeded, e.what());
    }
    if (terms && limit == term_limit) return make_result(Status::Error, "no term-shaped triple exists");
    return make_result(Status::BudgetExceeded, "no triple within total size " + std::to_string(limit));
}

std::optional<FlipSet> oracle_min_flip(const PartialAssignment& s, const Formula& target) {
    std::set<Symbol> syms;
    for (const auto& [sym, value] : s.bindings()) syms.insert(sym);
    collect_symbols(target, syms);
    if (syms.size() > EnumerationBudget::kVocabCap) throw BudgetExceeded("vocabulary exceeds the oracle cap");

    Universe u({syms.begin(), syms.end()});
    const Table goal = u.table(target);
    const std::vector<Literal> lits = s.literals();
    const std::size_t m = lits.size();

    for (std::size_t card = 0; card <= m; ++card) {
        // Combinations of `card` positions in lexicographic order.
        std::vector<std::size_t> pick(card);
        for (std::size_t i = 0; i < card; ++i) pick[i] = i;
        while (true) {
            PartialAssignment flipped = s;
            for (auto i : pick) flipped.bind(lits[i].symbol, lits[i].negative);
            if (u.table(flipped).subset_of(goal)) {
                FlipSet out;
                for (auto i : pick) out.literals.push_back(lits[i]);
                return out;
            }
            std::size_t i = card;
            while (i > 0 && pick[i - 1] == m - card + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < card; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace contrastix
