#pragma once

// Internal search engine shared by the solve_* entry points. Points are
// valuations of a local universe of at most kMaxUniverse symbols, encoded as
// bit masks (bit i is universe[i]).

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "contrastix/cnf.hpp"

namespace contrastix::detail {

inline constexpr std::size_t kMaxUniverse = 16;

class Bits {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bits() = default;
    explicit Bits(std::size_t n, bool filled = false);

    [[nodiscard]] std::size_t size() const { return n_; }
    void set(std::size_t i) { w_[i / 64] |= 1ULL << (i % 64); }
    [[nodiscard]] bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1ULL; }
    [[nodiscard]] bool none() const;
    [[nodiscard]] bool any() const { return !none(); }
    [[nodiscard]] std::size_t first() const;
    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] bool subset_of(const Bits& o) const;

    Bits& operator&=(const Bits& o);
    Bits& operator|=(const Bits& o);
    /// this &= ~o
    Bits& subtract(const Bits& o);
    [[nodiscard]] Bits complement() const;

    friend bool operator==(const Bits&, const Bits&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// A clause over universe bits: holds at `mask` iff some positive bit is set
/// or some negative bit is clear. pos = neg = 0 is the empty clause.
struct LocalClause {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;

    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] bool empty() const { return pos == 0 && neg == 0; }
    [[nodiscard]] bool holds(std::uint32_t mask) const { return (mask & pos) != 0 || (~mask & neg) != 0; }

    friend auto operator<=>(const LocalClause&, const LocalClause&) = default;
};

/// The conditions L1 ⊆ M(θ∧χ) ⊆ U1 and L2 ⊆ M(θ′∧χ) ⊆ U2 over all 2^n points.
/// In witness mode L2 is replaced, per witness w ∈ witnesses, by {w}.
struct SearchSpec {
    std::vector<Symbol> universe;
    /// Universe bits allowed in output clauses.
    std::vector<std::size_t> output_bits;
    Bits l1, u1, l2, u2;
    bool witness_mode = false;
    Bits witnesses;
    bool terms = false;
};

struct SearchControl {
    std::optional<std::size_t> max_total;
    bool cegar = false;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
};

struct SearchOutcome {
    enum class Kind { Found, Exhausted, Bounded, Timeout };

    Kind kind = Kind::Exhausted;
    CnfFormula theta;
    CnfFormula theta_prime;
    CnfFormula chi;
    std::size_t total = 0;
    std::size_t chi_size = 0;
    /// Refinement rounds used by the CEGAR strategy (1 for exhaustive).
    std::size_t rounds = 0;
};

/// Region of a formula over the universe, one bit per point.
Bits region(const Formula& f, std::span<const Symbol> universe);

/// Prime implicates, over the given bits, of the set of points `models`.
/// For an empty set this is the single empty clause.
std::vector<LocalClause> prime_implicates(const Bits& models, std::span<const std::size_t> bits);

/// Unit clauses over the given bits that hold on every point of `models`.
std::vector<LocalClause> unit_implicates(const Bits& models, std::span<const std::size_t> bits);

Clause to_clause(const LocalClause& c, std::span<const Symbol> universe);

/// Minimal total size, then maximal χ size, then least (θ, θ′, χ) in canonical order.
/// Exhausted: no triple over the output bits exists. Bounded: none within
/// control.max_total.
SearchOutcome search(const SearchSpec& spec, const SearchControl& control);

}  // namespace contrastix::detail
