#include "contrastix/json.hpp"

#include "contrastix/parser.hpp"

namespace contrastix {

namespace {

bool is_top(const Formula& f) { return f.kind() == Formula::Kind::Not && f.operand().kind() == Formula::Kind::Bottom; }

void collect_literals(const Formula& f, std::vector<Literal>& out, bool& tautology) {
    switch (f.kind()) {
        case Formula::Kind::Or:
            collect_literals(f.lhs(), out, tautology);
            collect_literals(f.rhs(), out, tautology);
            return;
        case Formula::Kind::Atom: out.push_back(Literal{f.symbol(), false}); return;
        case Formula::Kind::Bottom: return;
        case Formula::Kind::Not:
            if (f.operand().kind() == Formula::Kind::Atom) {
                out.push_back(Literal{f.operand().symbol(), true});
                return;
            }
            if (is_top(f)) {
                tautology = true;
                return;
            }
            break;
        case Formula::Kind::And: break;
    }
    throw JsonFormatError("formula is not in conjunctive normal form");
}

void collect_clauses(const Formula& f, std::vector<Clause>& out) {
    if (f.kind() == Formula::Kind::And) {
        collect_clauses(f.lhs(), out);
        collect_clauses(f.rhs(), out);
        return;
    }
    std::vector<Literal> lits;
    bool tautology = false;
    collect_literals(f, lits, tautology);
    if (!tautology) out.emplace_back(std::move(lits));
}

Json formula_or_null(bool present, const CnfFormula& f, const Vocabulary& vocab) {
    return present ? Json(to_string(f, vocab)) : Json(nullptr);
}

SolveStatus parse_status(const std::string& s) {
    for (auto st : {SolveStatus::Ok, SolveStatus::Error, SolveStatus::Timeout})
        if (to_string(st) == s) return st;
    throw JsonFormatError("unknown status '" + s + "'");
}

ClauseTag parse_tag(const std::string& s) {
    for (auto t : {ClauseTag::WeakContrast, ClauseTag::Likeness, ClauseTag::NotEntailed})
        if (to_string(t) == s) return t;
    throw JsonFormatError("unknown clause tag '" + s + "'");
}

Json tags_to_json(const std::vector<ClauseTag>& tags) {
    Json arr = Json::array();
    for (auto t : tags) arr.push_back(std::string(to_string(t)));
    return arr;
}

std::vector<ClauseTag> tags_from_json(const Json& j) {
    std::vector<ClauseTag> out;
    for (const auto& t : j) out.push_back(parse_tag(t.get<std::string>()));
    return out;
}

}  // namespace

CnfFormula parse_cnf(std::string_view text, Vocabulary& vocab) {
    Formula f = parse_formula(text, vocab);
    CnfFormula out;
    collect_clauses(f, out.clauses);
    return canonicalize(std::move(out));
}

Json to_json(const VerificationReport& report) {
    Json conditions = Json::object();
    for (const auto& [name, ok] : report.conditions) conditions[name] = ok;
    Json j;
    j["conditions"] = std::move(conditions);
    j["theta_tags"] = tags_to_json(report.theta_tags);
    j["theta_prime_tags"] = tags_to_json(report.theta_prime_tags);
    j["chi_tags"] = tags_to_json(report.chi_tags);
    j["all_ok"] = report.all_ok();
    return j;
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport r;
    for (const auto& [name, ok] : j.at("conditions").items()) r.conditions.emplace_back(name, ok.get<bool>());
    r.theta_tags = tags_from_json(j.at("theta_tags"));
    r.theta_prime_tags = tags_from_json(j.at("theta_prime_tags"));
    r.chi_tags = tags_from_json(j.at("chi_tags"));
    return r;
}

Json to_json(const Solution& sol, const Vocabulary& vocab) {
    Json j;
    j["status"] = std::string(to_string(sol.status));
    j["theta"] = formula_or_null(sol.has_triple, sol.theta, vocab);
    j["theta_prime"] = formula_or_null(sol.has_triple, sol.theta_prime, vocab);
    j["chi"] = formula_or_null(sol.has_triple, sol.chi, vocab);
    j["total_size"] = sol.total_size;
    j["chi_size"] = sol.chi_size;
    j["optimal"] = sol.optimal;
    j["message"] = sol.message;
    j["verification"] = sol.verification ? to_json(*sol.verification) : Json(nullptr);
    return j;
}

Solution solution_from_json(const Json& j, Vocabulary& vocab) {
    try {
        Solution s;
        s.status = parse_status(j.at("status").get<std::string>());
        s.has_triple = !j.at("theta").is_null();
        if (s.has_triple) {
            s.theta = parse_cnf(j.at("theta").get<std::string>(), vocab);
            s.theta_prime = parse_cnf(j.at("theta_prime").get<std::string>(), vocab);
            s.chi = parse_cnf(j.at("chi").get<std::string>(), vocab);
        }
        s.total_size = j.at("total_size").get<std::size_t>();
        s.chi_size = j.at("chi_size").get<std::size_t>();
        s.optimal = j.at("optimal").get<bool>();
        s.message = j.value("message", std::string{});
        if (j.contains("verification") && !j["verification"].is_null())
            s.verification = report_from_json(j["verification"]);
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw JsonFormatError(std::string("malformed solution JSON: ") + e.what());
    }
}

Json to_json(const OptimalSet& set, const Vocabulary& vocab) {
    Solution head;
    switch (set.status) {
        case OptimalSet::Status::Ok: head.status = SolveStatus::Ok; break;
        case OptimalSet::Status::Error: head.status = SolveStatus::Error; break;
        case OptimalSet::Status::BudgetExceeded: head.status = SolveStatus::Timeout; break;
    }
    head.message = set.message;
    if (!set.optima.empty()) {
        head.has_triple = true;
        head.theta = set.optima.front().theta;
        head.theta_prime = set.optima.front().theta_prime;
        head.chi = set.optima.front().chi;
        head.total_size = set.total_size;
        head.chi_size = set.chi_size;
        head.optimal = true;
    }
    Json j = to_json(head, vocab);
    Json all = Json::array();
    for (const auto& t : set.optima)
        all.push_back(Json{{"theta", to_string(t.theta, vocab)},
                           {"theta_prime", to_string(t.theta_prime, vocab)},
                           {"chi", to_string(t.chi, vocab)}});
    j["all_optima"] = std::move(all);
    return j;
}

}  // namespace contrastix
