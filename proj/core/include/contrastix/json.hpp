#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string_view>

#include "contrastix/oracle.hpp"
#include "contrastix/problem.hpp"

namespace contrastix {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads a formula that is syntactically a CNF (conjunction of disjunctions
/// of literals, or true/false) clause by clause, without simplification
/// beyond canonical ordering. Throws ParseError or JsonFormatError.
CnfFormula parse_cnf(std::string_view text, Vocabulary& vocab);

/// {"status","theta","theta_prime","chi","total_size","chi_size","optimal","message","verification"}.
/// Formula fields are null when the solution carries no triple.
Json to_json(const Solution& sol, const Vocabulary& vocab);
Solution solution_from_json(const Json& j, Vocabulary& vocab);

Json to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);

/// Solution-shaped object for the first optimum plus an "all_optima" array.
Json to_json(const OptimalSet& set, const Vocabulary& vocab);

}  // namespace contrastix
