#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <tuple>

namespace contrastix::detail {

// ---------------------------------------------------------------- Bits

Bits::Bits(std::size_t n, bool filled) : n_(n), w_((n + 63) / 64, filled ? ~0ULL : 0ULL) {
    if (filled && n % 64 != 0) w_.back() &= (1ULL << (n % 64)) - 1;
}

bool Bits::none() const {
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Bits::first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return npos;
}

std::size_t Bits::count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Bits::subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

Bits& Bits::operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

Bits& Bits::operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

Bits& Bits::subtract(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

Bits Bits::complement() const {
    Bits r(n_, true);
    return r.subtract(*this);
}

// ---------------------------------------------------------------- clauses and regions

std::size_t LocalClause::size() const { return static_cast<std::size_t>(std::popcount(pos) + std::popcount(neg)); }

Clause to_clause(const LocalClause& c, std::span<const Symbol> universe) {
    std::vector<Literal> lits;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        if (c.pos >> i & 1U) lits.push_back(Literal{universe[i], false});
        if (c.neg >> i & 1U) lits.push_back(Literal{universe[i], true});
    }
    return Clause(std::move(lits));
}

Bits region(const Formula& f, std::span<const Symbol> universe) {
    const std::size_t points = std::size_t{1} << universe.size();
    std::uint32_t width = 0;
    for (Symbol s : universe) width = std::max(width, s.id + 1);
    Bits out(points);
    Valuation v(width, false);
    for (std::size_t m = 0; m < points; ++m) {
        for (std::size_t i = 0; i < universe.size(); ++i) v[universe[i].id] = (m >> i) & 1U;
        if (evaluate(f, v)) out.set(m);
    }
    return out;
}

std::vector<LocalClause> prime_implicates(const Bits& models, std::span<const std::size_t> bits) {
    const std::size_t m = bits.size();
    std::vector<char> projected(std::size_t{1} << m, 0);
    for (std::size_t p = 0; p < models.size(); ++p) {
        if (!models.test(p)) continue;
        std::size_t q = 0;
        for (std::size_t i = 0; i < m; ++i) q |= ((p >> bits[i]) & 1U) << i;
        projected[q] = 1;
    }

    // Cubes over the projected variables in base 3 (digit 0/1 fixed, 2 free).
    // A cube lies in the zero set iff it falsifies no model; maximal such
    // cubes are the negations of the prime implicates.
    std::vector<std::size_t> pow3(m + 1, 1);
    for (std::size_t i = 1; i <= m; ++i) pow3[i] = pow3[i - 1] * 3;
    const std::size_t cubes = pow3[m];
    std::vector<char> in_zero(cubes, 0);
    std::vector<std::uint8_t> digit(m, 0);
    for (std::size_t c = 0; c < cubes; ++c) {
        std::size_t free_at = m;
        for (std::size_t i = 0; i < m; ++i)
            if (digit[i] == 2) {
                free_at = i;
                break;
            }
        if (free_at == m) {
            std::size_t q = 0;
            for (std::size_t i = 0; i < m; ++i) q |= std::size_t{digit[i]} << i;
            in_zero[c] = !projected[q];
        } else {
            in_zero[c] = in_zero[c - 2 * pow3[free_at]] && in_zero[c - pow3[free_at]];
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (++digit[i] < 3) break;
            digit[i] = 0;
        }
    }

    std::vector<LocalClause> primes;
    std::fill(digit.begin(), digit.end(), 0);
    for (std::size_t c = 0; c < cubes; ++c) {
        if (in_zero[c]) {
            bool maximal = true;
            LocalClause clause;
            for (std::size_t i = 0; i < m && maximal; ++i) {
                if (digit[i] == 2) continue;
                if (in_zero[c + (2 - digit[i]) * pow3[i]]) maximal = false;
                // falsified when the bit is 0 -> positive literal
                if (digit[i] == 0)
                    clause.pos |= 1U << bits[i];
                else
                    clause.neg |= 1U << bits[i];
            }
            if (maximal) primes.push_back(clause);
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (++digit[i] < 3) break;
            digit[i] = 0;
        }
    }
    return primes;
}

std::vector<LocalClause> unit_implicates(const Bits& models, std::span<const std::size_t> bits) {
    std::vector<LocalClause> out;
    for (std::size_t b : bits) {
        bool all_true = true;
        bool all_false = true;
        for (std::size_t p = 0; p < models.size(); ++p) {
            if (!models.test(p)) continue;
            if ((p >> b) & 1U)
                all_false = false;
            else
                all_true = false;
        }
        if (all_true) out.push_back(LocalClause{1U << b, 0});
        if (all_false) out.push_back(LocalClause{0, 1U << b});
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct DeadlineHit {};

class Ticker {
public:
    explicit Ticker(const std::optional<Clock::time_point>& deadline, const std::atomic<bool>& stop)
        : deadline_(deadline), stop_(stop) {}
    void tick() {
        if ((++ticks_ & 0x3FFU) != 0) return;
        if (stop_.load(std::memory_order_relaxed)) throw DeadlineHit{};
        if (deadline_ && Clock::now() > *deadline_) throw DeadlineHit{};
    }

private:
    const std::optional<Clock::time_point>& deadline_;
    const std::atomic<bool>& stop_;
    std::uint64_t ticks_ = 0;
};

struct PoolEntry {
    LocalClause clause;
    Bits kills;   // points of E falsifying the clause
    Bits models;  // points of E satisfying it
};

std::vector<PoolEntry> attach(const std::vector<LocalClause>& pool, const std::vector<std::uint32_t>& points) {
    std::vector<PoolEntry> out;
    out.reserve(pool.size());
    for (const auto& c : pool) {
        PoolEntry e{c, Bits(points.size()), Bits(points.size())};
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (c.holds(points[j]))
                e.models.set(j);
            else
                e.kills.set(j);
        }
        out.push_back(std::move(e));
    }
    return out;
}

// One (L2, pools) combination: the single two-sided problem, or one witness.
struct Branch {
    std::vector<LocalClause> chi_pool;
    std::vector<LocalClause> theta_prime_pool;
};

struct Candidate {
    CnfFormula theta, theta_prime, chi;

    // Canonical order: literals by (symbol id, positive first), then lexicographic.
    [[nodiscard]] auto key() const { return std::tie(theta, theta_prime, chi); }
};

bool better(const Candidate& a, const std::optional<Candidate>& b) { return !b || a.key() < b->key(); }

class Context {
public:
    explicit Context(const SearchSpec& spec) : spec_(spec) {}

    CnfFormula formula(const std::vector<const LocalClause*>& cs) const {
        CnfFormula f;
        for (const auto* c : cs) f.clauses.push_back(to_clause(*c, spec_.universe));
        return canonicalize(std::move(f));
    }
    [[nodiscard]] bool terms() const { return spec_.terms; }

private:
    const SearchSpec& spec_;
};

// Least-cost set of pool clauses falsifying every point of `bad`; among
// least-cost sets the least in canonical order.
class Cover {
public:
    Cover(const std::vector<PoolEntry>& pool, const Context& ctx, Ticker& ticker)
        : pool_(pool), ctx_(ctx), ticker_(ticker) {}

    bool solve(const Bits& bad, std::size_t limit) {
        found_ = false;
        bound_ = limit;
        chosen_.clear();
        used_pos_ = used_neg_ = 0;
        dfs(bad, 0);
        return found_;
    }
    [[nodiscard]] std::size_t cost() const { return best_cost_; }
    [[nodiscard]] const CnfFormula& formula() const { return best_; }

private:
    void dfs(const Bits& uncovered, std::size_t cost) {
        ticker_.tick();
        std::size_t p = uncovered.first();
        if (p == Bits::npos) {
            std::vector<const LocalClause*> cs;
            for (auto i : chosen_) cs.push_back(&pool_[i].clause);
            CnfFormula f = ctx_.formula(cs);
            if (!found_ || cost < best_cost_ || (cost == best_cost_ && f < best_)) {
                found_ = true;
                best_cost_ = cost;
                bound_ = cost;
                best_ = std::move(f);
            }
            return;
        }
        for (std::size_t i = 0; i < pool_.size(); ++i) {
            const PoolEntry& e = pool_[i];
            if (!e.kills.test(p)) continue;
            const std::size_t next = cost + e.clause.size();
            if (next > bound_) continue;
            if (ctx_.terms() && ((e.clause.pos & used_neg_) || (e.clause.neg & used_pos_))) continue;
            Bits rest = uncovered;
            rest.subtract(e.kills);
            chosen_.push_back(i);
            std::uint32_t saved_pos = used_pos_, saved_neg = used_neg_;
            used_pos_ |= e.clause.pos;
            used_neg_ |= e.clause.neg;
            dfs(rest, next);
            used_pos_ = saved_pos;
            used_neg_ = saved_neg;
            chosen_.pop_back();
        }
    }

    const std::vector<PoolEntry>& pool_;
    const Context& ctx_;
    Ticker& ticker_;
    bool found_ = false;
    std::size_t bound_ = 0;
    std::size_t best_cost_ = 0;
    CnfFormula best_;
    std::vector<std::size_t> chosen_;
    std::uint32_t used_pos_ = 0;
    std::uint32_t used_neg_ = 0;
};

// The relaxed problem on a sample E of points: upper bounds are only checked
// on E, lower bounds hold exactly through the pools.
class Relaxed {
public:
    Relaxed(const SearchSpec& spec, const SearchControl& control, const std::vector<LocalClause>& theta_pool,
            const std::vector<Branch>& branches, const std::vector<std::uint32_t>& points)
        : control_(control), ctx_(spec), theta_(attach(theta_pool, points)), u1_(points.size()),
          u2_(points.size()) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (spec.u1.test(points[j])) u1_.set(j);
            if (spec.u2.test(points[j])) u2_.set(j);
        }
        for (const auto& b : branches) {
            chi_.push_back(attach(b.chi_pool, points));
            theta_prime_.push_back(attach(b.theta_prime_pool, points));
        }
        full_ = Bits(points.size(), true);
    }

    struct Result {
        std::size_t total = 0;
        std::size_t chi_size = 0;
        Candidate best;
    };

    std::optional<Result> run(std::size_t k_from, std::size_t k_cap) {
        for (std::size_t k = k_from; k <= k_cap; ++k) {
            for (std::size_t c = k + 1; c-- > 0;) {
                if (auto best = level(k, c)) return Result{k, c, std::move(*best)};
            }
        }
        return std::nullopt;
    }

private:
    struct Task {
        std::size_t branch;
        std::size_t first;  // npos: χ is ⊤ or ⊥
    };

    std::optional<Candidate> level(std::size_t k, std::size_t c) {
        std::vector<Task> tasks;
        for (std::size_t b = 0; b < chi_.size(); ++b) {
            if (c == 0) {
                tasks.push_back(Task{b, Bits::npos});
                continue;
            }
            for (std::size_t i = 0; i < chi_[b].size(); ++i) {
                const auto& cl = chi_[b][i].clause;
                if (!cl.empty() && cl.size() <= c) tasks.push_back(Task{b, i});
            }
        }
        std::vector<std::optional<Candidate>> results(tasks.size());
        std::atomic<std::size_t> next{0};
        std::atomic<bool> stop{false};
        std::exception_ptr failure;
        std::mutex failure_mutex;

        auto worker = [&] {
            Ticker ticker(control_.deadline, stop);
            try {
                for (std::size_t t = next++; t < tasks.size(); t = next++)
                    results[t] = run_task(tasks[t], k, c, ticker);
            } catch (...) {
                stop = true;
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        };
        const unsigned jobs = std::max(1U, control_.jobs);
        if (jobs == 1 || tasks.size() <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned j = 0; j < std::min<std::size_t>(jobs, tasks.size()); ++j) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        if (failure) std::rethrow_exception(failure);

        std::optional<Candidate> best;
        for (auto& r : results)
            if (r && better(*r, best)) best = std::move(r);
        return best;
    }

    std::optional<Candidate> run_task(const Task& task, std::size_t k, std::size_t c, Ticker& ticker) {
        const auto& chi_pool = chi_[task.branch];
        Cover theta_cover(theta_, ctx_, ticker);
        Cover theta_prime_cover(theta_prime_[task.branch], ctx_, ticker);
        std::optional<Candidate> best;
        std::vector<std::size_t> chosen;

        auto evaluate = [&](const Bits& models) {
            Bits bad1 = models;
            bad1.subtract(u1_);
            Bits bad2 = models;
            bad2.subtract(u2_);
            const std::size_t budget = k - c;
            if (!theta_cover.solve(bad1, budget)) return;
            if (!theta_prime_cover.solve(bad2, budget - theta_cover.cost())) return;
            if (theta_cover.cost() + theta_prime_cover.cost() != budget) return;
            std::vector<const LocalClause*> cs;
            for (auto i : chosen) cs.push_back(&chi_pool[i].clause);
            Candidate cand;
            cand.chi = ctx_.formula(cs);
            cand.theta = theta_cover.formula();
            cand.theta_prime = theta_prime_cover.formula();
            if (better(cand, best)) best = std::move(cand);
        };

        if (task.first == Bits::npos) {
            evaluate(full_);  // χ = ⊤
            for (std::size_t i = 0; i < chi_pool.size(); ++i)
                if (chi_pool[i].clause.empty()) {
                    chosen = {i};
                    evaluate(chi_pool[i].models);  // χ = ⊥
                }
            return best;
        }

        std::uint32_t used_pos = 0, used_neg = 0;
        auto dfs = [&](auto& self, std::size_t from, std::size_t remaining, const Bits& models) -> void {
            ticker.tick();
            if (remaining == 0) {
                evaluate(models);
                return;
            }
            for (std::size_t i = from; i < chi_pool.size(); ++i) {
                const LocalClause& cl = chi_pool[i].clause;
                if (cl.empty() || cl.size() > remaining) continue;
                if (ctx_.terms() && ((cl.pos & used_neg) || (cl.neg & used_pos))) continue;
                Bits next = models;
                next &= chi_pool[i].models;
                chosen.push_back(i);
                std::uint32_t sp = used_pos, sn = used_neg;
                used_pos |= cl.pos;
                used_neg |= cl.neg;
                self(self, i + 1, remaining - cl.size(), next);
                used_pos = sp;
                used_neg = sn;
                chosen.pop_back();
            }
        };
        const LocalClause& head = chi_pool[task.first].clause;
        chosen = {task.first};
        used_pos = head.pos;
        used_neg = head.neg;
        dfs(dfs, task.first + 1, c - head.size(), chi_pool[task.first].models);
        return best;
    }

    const SearchControl& control_;
    Context ctx_;
    std::vector<PoolEntry> theta_;
    std::vector<std::vector<PoolEntry>> chi_;
    std::vector<std::vector<PoolEntry>> theta_prime_;
    Bits u1_, u2_, full_;
};

std::uint32_t mask_of(const Clause& c, std::span<const Symbol> universe, bool negative) {
    std::uint32_t m = 0;
    for (auto l : c.literals()) {
        if (l.negative != negative) continue;
        auto it = std::find(universe.begin(), universe.end(), l.symbol);
        m |= 1U << static_cast<std::uint32_t>(it - universe.begin());
    }
    return m;
}

Bits models_of(const CnfFormula& f, std::span<const Symbol> universe) {
    std::vector<LocalClause> local;
    for (const auto& c : f.clauses) local.push_back(LocalClause{mask_of(c, universe, false), mask_of(c, universe, true)});
    const std::size_t points = std::size_t{1} << universe.size();
    Bits out(points);
    for (std::size_t p = 0; p < points; ++p) {
        auto q = static_cast<std::uint32_t>(p);
        if (std::all_of(local.begin(), local.end(), [&](const LocalClause& c) { return c.holds(q); })) out.set(p);
    }
    return out;
}

std::size_t pool_weight(const std::vector<LocalClause>& pool) {
    std::size_t w = 0;
    for (const auto& c : pool) w += c.size();
    return w;
}

}  // namespace

SearchOutcome search(const SearchSpec& spec, const SearchControl& control) {
    const std::size_t points = std::size_t{1} << spec.universe.size();
    auto pool_for = [&](const Bits& lower) {
        auto pool = spec.terms ? unit_implicates(lower, spec.output_bits) : prime_implicates(lower, spec.output_bits);
        std::sort(pool.begin(), pool.end(), [](const LocalClause& a, const LocalClause& b) {
            return std::make_tuple(a.size(), a) < std::make_tuple(b.size(), b);
        });
        return pool;
    };

    const std::vector<LocalClause> theta_pool = pool_for(spec.l1);
    std::vector<Branch> branches;
    if (spec.witness_mode) {
        for (std::size_t w = 0; w < points; ++w) {
            if (!spec.witnesses.test(w)) continue;
            Bits single(points);
            single.set(w);
            Bits lower = spec.l1;
            lower |= single;
            branches.push_back(Branch{pool_for(lower), pool_for(single)});
        }
    } else {
        Bits both = spec.l1;
        both |= spec.l2;
        branches.push_back(Branch{pool_for(both), pool_for(spec.l2)});
    }

    // No optimal triple repeats a clause within one formula, so the pool
    // weights bound the search; terms are additionally bounded by 3n.
    std::size_t k_cap = pool_weight(theta_pool);
    std::size_t widest_chi = 0, widest_theta_prime = 0;
    for (const auto& b : branches) {
        widest_chi = std::max(widest_chi, pool_weight(b.chi_pool));
        widest_theta_prime = std::max(widest_theta_prime, pool_weight(b.theta_prime_pool));
    }
    k_cap += widest_chi + widest_theta_prime;
    if (spec.terms) k_cap = std::min(k_cap, 3 * spec.output_bits.size());
    const bool capped_by_user = control.max_total && *control.max_total < k_cap;
    if (capped_by_user) k_cap = *control.max_total;

    SearchOutcome out;
    std::vector<std::uint32_t> sample;
    if (control.cegar) {
        std::mt19937_64 rng(control.seed);
        std::vector<std::uint32_t> all(points);
        for (std::size_t p = 0; p < points; ++p) all[p] = static_cast<std::uint32_t>(p);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(std::min<std::size_t>(points, 4));
        sample = std::move(all);
        std::sort(sample.begin(), sample.end());
    } else {
        sample.resize(points);
        for (std::size_t p = 0; p < points; ++p) sample[p] = static_cast<std::uint32_t>(p);
    }

    std::size_t k_from = 0;
    try {
        while (true) {
            ++out.rounds;
            Relaxed relaxed(spec, control, theta_pool, branches, sample);
            auto result = relaxed.run(k_from, k_cap);
            if (!result) {
                out.kind = capped_by_user ? SearchOutcome::Kind::Bounded : SearchOutcome::Kind::Exhausted;
                return out;
            }
            const Candidate& best = result->best;
            if (control.cegar) {
                Bits chi = models_of(best.chi, spec.universe);
                Bits first = models_of(best.theta, spec.universe);
                first &= chi;
                first.subtract(spec.u1);
                Bits second = models_of(best.theta_prime, spec.universe);
                second &= chi;
                second.subtract(spec.u2);
                bool refined = false;
                for (const Bits* bad : {&first, &second}) {
                    auto p = static_cast<std::uint32_t>(bad->first());
                    if (bad->none()) continue;
                    sample.insert(std::upper_bound(sample.begin(), sample.end(), p), p);
                    refined = true;
                }
                if (refined) {
                    k_from = result->total;
                    continue;
                }
            }
            out.kind = SearchOutcome::Kind::Found;
            out.theta = best.theta;
            out.theta_prime = best.theta_prime;
            out.chi = best.chi;
            out.total = result->total;
            out.chi_size = result->chi_size;
            return out;
        }
    } catch (const DeadlineHit&) {
        out.kind = SearchOutcome::Kind::Timeout;
        return out;
    }
}

}  // namespace contrastix::detail
