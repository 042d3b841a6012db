#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "contrastix/problem.hpp"

namespace contrastix {

/// Limits for exhaustive enumeration. Vocabularies above 12 symbols are rejected.
struct EnumerationBudget {
    static constexpr std::size_t kVocabCap = 12;

    std::size_t max_total_size = 12;
    std::size_t max_vocab = kVocabCap;
    std::chrono::milliseconds deadline{std::chrono::minutes(10)};
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Calls `visit` for every canonical tautology-free CNF over `vocab` with
/// cnf_size <= max_size, exactly once, ordered by size and then canonical order.
void enumerate_cnf(std::span<const Symbol> vocab, std::size_t max_size,
                   const std::function<void(const CnfFormula&)>& visit, const EnumerationBudget& budget = {});
std::vector<CnfFormula> enumerate_cnf(std::span<const Symbol> vocab, std::size_t max_size,
                                      const EnumerationBudget& budget = {});

struct Triple {
    CnfFormula theta;
    CnfFormula theta_prime;
    CnfFormula chi;

    friend auto operator<=>(const Triple&, const Triple&) = default;
    friend bool operator==(const Triple&, const Triple&) = default;
};

struct OptimalSet {
    enum class Status { Ok, Error, BudgetExceeded };

    Status status = Status::Error;
    std::size_t total_size = 0;
    std::size_t chi_size = 0;
    /// Every optimal triple, canonical and sorted.
    std::vector<Triple> optima;
    std::string message;

    [[nodiscard]] bool contains(const Triple& t) const;
};

/// Brute-force reference: enumerates all output triples over the instance
/// symbols in increasing total size and checks the definition by truth table.
OptimalSet oracle_solve(const ProblemInstance& inst, const EnumerationBudget& budget,
                        OutputShape shape = OutputShape::Cnf);

struct FlipSet {
    std::vector<Literal> literals;

    [[nodiscard]] std::size_t size() const { return literals.size(); }
};

/// A minimum-cardinality set of literals of `s` whose flipping makes `s` entail
/// `target` (for a total `s`: satisfy it). Among minimum sets the first in
/// literal order is returned; nullopt when no flip set works.
std::optional<FlipSet> oracle_min_flip(const PartialAssignment& s, const Formula& target);

}  // namespace contrastix
