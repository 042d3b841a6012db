#pragma once

#include <optional>

#include "contrastix/cnf.hpp"

namespace contrastix {

/// Complete DPLL search (two watched literals, unit propagation,
/// chronological backtracking). Returns a model covering every symbol id up to
/// the largest one occurring in `cnf`, or nullopt when unsatisfiable.
std::optional<Valuation> find_model(const CnfFormula& cnf);

}  // namespace contrastix
