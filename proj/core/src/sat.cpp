#include "contrastix/sat.hpp"

#include <algorithm>
#include <cstdint>

namespace contrastix {

namespace {

// Literal codes: 2*var for the positive literal, 2*var+1 for the negative one.
constexpr int code(Literal l) { return static_cast<int>(2 * l.symbol.id + (l.negative ? 1 : 0)); }
constexpr int negate(int lit) { return lit ^ 1; }

class Dpll {
public:
    explicit Dpll(const CnfFormula& cnf) {
        std::uint32_t vars = 0;
        for (const auto& c : cnf.clauses)
            for (auto l : c.literals()) vars = std::max(vars, l.symbol.id + 1);
        value_.assign(vars, -1);
        watches_.resize(2 * vars);
        for (const auto& c : cnf.clauses) {
            if (c.is_tautology()) continue;
            if (c.empty()) {
                trivially_unsat_ = true;
                continue;
            }
            std::vector<int> lits;
            for (auto l : c.literals()) lits.push_back(code(l));
            if (lits.size() == 1) {
                units_.push_back(lits[0]);
                continue;
            }
            auto idx = clauses_.size();
            watches_[lits[0]].push_back(idx);
            watches_[lits[1]].push_back(idx);
            clauses_.push_back(std::move(lits));
        }
    }

    std::optional<Valuation> solve() {
        if (trivially_unsat_) return std::nullopt;
        for (int u : units_) {
            if (lit_value(u) == 0) return std::nullopt;
            if (lit_value(u) < 0) assign(u);
        }
        if (!propagate()) return std::nullopt;

        for (;;) {
            int var = next_unassigned();
            if (var < 0) break;
            decisions_.push_back({trail_.size(), false});
            assign(2 * var);
            while (!propagate()) {
                // Flip the deepest decision that has not been flipped yet.
                while (!decisions_.empty() && decisions_.back().flipped) {
                    undo_to(decisions_.back().trail_index);
                    decisions_.pop_back();
                }
                if (decisions_.empty()) return std::nullopt;
                auto& d = decisions_.back();
                int lit = trail_[d.trail_index];
                undo_to(d.trail_index);
                d.flipped = true;
                assign(negate(lit));
            }
        }
        Valuation model(value_.size(), false);
        for (std::size_t v = 0; v < value_.size(); ++v) model[v] = value_[v] == 1;
        return model;
    }

private:
    struct Decision {
        std::size_t trail_index;
        bool flipped;
    };

    int lit_value(int lit) const {
        int v = value_[lit >> 1];
        if (v < 0) return -1;
        return (lit & 1) ? 1 - v : v;
    }

    void assign(int lit) {
        value_[lit >> 1] = (lit & 1) ? 0 : 1;
        trail_.push_back(lit);
    }

    void undo_to(std::size_t index) {
        while (trail_.size() > index) {
            value_[trail_.back() >> 1] = -1;
            trail_.pop_back();
        }
        head_ = std::min(head_, index);
    }

    int next_unassigned() const {
        for (std::size_t v = 0; v < value_.size(); ++v)
            if (value_[v] < 0) return static_cast<int>(v);
        return -1;
    }

    bool propagate() {
        while (head_ < trail_.size()) {
            int falsified = negate(trail_[head_++]);
            auto& ws = watches_[falsified];
            for (std::size_t i = 0; i < ws.size();) {
                auto& c = clauses_[ws[i]];
                if (c[0] == falsified) std::swap(c[0], c[1]);
                // c[1] is the falsified watch.
                if (lit_value(c[0]) == 1) {
                    ++i;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < c.size(); ++k) {
                    if (lit_value(c[k]) != 0) {
                        std::swap(c[1], c[k]);
                        watches_[c[1]].push_back(ws[i]);
                        ws[i] = ws.back();
                        ws.pop_back();
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                if (lit_value(c[0]) == 0) return false;
                assign(c[0]);
                ++i;
            }
        }
        return true;
    }

    std::vector<std::vector<int>> clauses_;
    std::vector<std::vector<std::size_t>> watches_;
    std::vector<int> units_;
    std::vector<int> value_;
    std::vector<int> trail_;
    std::vector<Decision> decisions_;
    std::size_t head_ = 0;
    bool trivially_unsat_ = false;
};

}  // namespace

std::optional<Valuation> find_model(const CnfFormula& cnf) { return Dpll(cnf).solve(); }

}  // namespace contrastix
