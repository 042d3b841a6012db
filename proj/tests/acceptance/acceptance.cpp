// Acceptance run: one PASS/FAIL line per acceptance criterion. Expected values
// come from the brute-force oracle and the truth-table helpers under
// tests/support, never from the solver under test.
//
// Every solver call goes through Harness::solve, which runs it with one and
// with eight worker threads and records whether the JSON outputs differ.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "contrastix/json.hpp"
#include "contrastix/oracle.hpp"
#include "contrastix/solver.hpp"
#include "definitions.hpp"
#include "fixture_problem.hpp"
#include "instances.hpp"
#include "random_instances.hpp"

using namespace contrastix;
namespace ct = contrastix::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

class Harness {
public:
    Solution solve(const ProblemInstance& inst, SolveOptions opts = {}) {
        opts.jobs = 1;
        Solution one = contrastix::solve(inst, opts);
        opts.jobs = 8;
        Solution eight = contrastix::solve(inst, opts);
        ++runs_;
        if (to_json(one, inst.vocab).dump() != to_json(eight, inst.vocab).dump()) ++mismatches_;
        return one;
    }

    std::string cli(std::vector<std::string> args) {
        auto with_jobs = [&](const char* jobs) {
            std::vector<std::string> a{"contrastix"};
            a.insert(a.end(), args.begin(), args.end());
            a.insert(a.end(), {"--jobs", jobs});
            std::ostringstream out, err;
            last_exit_ = cli::run(a, out, err);
            return out.str();
        };
        std::string one = with_jobs("1");
        std::string eight = with_jobs("8");
        ++runs_;
        if (one != eight) ++mismatches_;
        return one;
    }

    [[nodiscard]] int last_exit() const { return last_exit_; }
    [[nodiscard]] std::size_t runs() const { return runs_; }
    [[nodiscard]] std::size_t mismatches() const { return mismatches_; }

private:
    std::size_t runs_ = 0;
    std::size_t mismatches_ = 0;
    int last_exit_ = 0;
};

Harness harness;

CnfFormula cnf(const char* text, Vocabulary& v) { return canonicalize(parse_cnf(text, v)); }

bool ok(const Solution& s) { return s.status == SolveStatus::Ok && s.has_triple; }

Triple triple_of(const Solution& s) { return Triple{s.theta, s.theta_prime, s.chi}; }

std::vector<bool> models_of_set(const ct::TruthTable& tt, const FormulaSet& fs) { return tt.models(fs); }

// ---------------------------------------------------------------------------

Outcome counting_ce() {
    Outcome o;
    ProblemInstance inst = ct::counting_ce();
    OptimalSet oracle = oracle_solve(inst, {});
    Solution sol = harness.solve(inst);
    o.require(oracle.status == OptimalSet::Status::Ok, "oracle finished");
    o.require(oracle.total_size == 4 && oracle.chi_size == 2, "oracle optimum (4, 2)");
    o.require(ok(sol) && sol.total_size == 4 && sol.chi_size == 2, "solver optimum (4, 2)");
    Vocabulary& v = inst.vocab;
    o.require(oracle.contains(Triple{cnf("q", v), cnf("!q", v), cnf("p & !r", v)}), "printed triple is optimal");
    o.require(ct::satisfies_definition(inst, sol.theta, sol.theta_prime, sol.chi), "solver triple meets definition");
    o.detail << "oracle " << oracle.total_size << "/" << oracle.chi_size << " (" << oracle.optima.size()
             << " optima), solver " << sol.total_size << "/" << sol.chi_size;
    return o;
}

Outcome counting_gce() {
    Outcome o;
    ProblemInstance inst = ct::counting_gce();
    SolveOptions opts;
    opts.strategy = Strategy::Cegar;
    Solution sol = harness.solve(inst, opts);
    o.require(ok(sol), "solver ok");
    o.require(sol.verification && sol.verification->all_ok(), "verification");
    o.require(sol.verification && sol.verification->condition("theta & chi == phi & !psi") == true &&
                  sol.verification->condition("theta' & chi == !phi & psi") == true,
              "both equivalences");
    o.require(sol.total_size <= 18, "size within printed triple's 18");
    o.require(ct::satisfies_definition(inst, sol.theta, sol.theta_prime, sol.chi), "truth-table definition");

    EnumerationBudget extended;
    extended.max_total_size = 18;
    extended.deadline = std::chrono::minutes(30);
    OptimalSet oracle = oracle_solve(inst, extended);
    o.require(oracle.status == OptimalSet::Status::Ok, "oracle finished within extended budget");
    o.require(oracle.total_size == sol.total_size && oracle.chi_size == sol.chi_size, "matches oracle optimum");

    for (const auto& c : sol.theta.clauses)
        o.require(is_weak_contrast(to_formula(c), inst.phi, inst.psi), "theta clause is a weak contrast");
    for (const auto& c : sol.chi.clauses)
        o.require(is_likeness(to_formula(c), inst.phi, inst.psi), "chi clause is a likeness");
    Vocabulary& v = inst.vocab;
    o.require(oracle.contains(Triple{cnf("(p | r) & (q | r) & (p | q)", v), cnf("(!p | !q) & (!p | !r) & (!q | !r)", v),
                                     cnf("(p | q | r) & (!p | !q | !r)", v)}) ||
                  oracle.total_size < 18,
              "printed triple among optima");
    o.detail << "solver " << sol.total_size << "/" << sol.chi_size << ", oracle " << oracle.total_size << "/"
             << oracle.chi_size;
    return o;
}

Outcome counting_sep() {
    Outcome o;
    ProblemInstance inst = ct::counting_sep();
    Solution sol = harness.solve(inst);
    OptimalSet oracle = oracle_solve(inst, {});
    o.require(ok(sol) && sol.total_size == 6, "solver size 6");
    o.require(oracle.status == OptimalSet::Status::Ok && oracle.total_size == 6, "oracle size 6");
    o.require(ct::satisfies_definition(inst, sol.theta, sol.theta_prime, sol.chi), "solver separator");

    Solution printed;
    printed.status = SolveStatus::Ok;
    printed.has_triple = true;
    printed.theta = cnf("(p | r) & (q | r) & (p | q)", inst.vocab);
    printed.total_size = cnf_size(printed.theta);
    printed.optimal = true;
    o.require(verify_solution(inst, printed).all_ok(), "printed separator verifies");
    o.require(ct::satisfies_definition(inst, printed.theta, printed.theta_prime, printed.chi),
              "printed separator, truth table");
    o.detail << "solver " << sol.total_size << ", oracle " << oracle.total_size;
    return o;
}

Outcome seabird() {
    Outcome o;
    ProblemInstance cd = ct::seabird(ProblemKind::CD);
    ProblemInstance cce = ct::seabird(ProblemKind::CCE);
    Solution cd_sol = harness.solve(cd);
    Solution cce_sol = harness.solve(cce);
    OptimalSet cd_oracle = oracle_solve(cd, {});
    OptimalSet cce_oracle = oracle_solve(cce, {});

    ct::TruthTable tt(cd.symbols());
    auto s_models = models_of_set(tt, cd.s);
    auto left = ct::both(tt.models(cd_sol.theta), tt.models(cd_sol.chi));
    auto right = ct::both(tt.models(cd_sol.theta_prime), tt.models(cd_sol.chi));
    auto target2 = tt.models(cd.counter_target());

    o.require(ok(cd_sol) && cd_sol.total_size == 7, "CD size 7");
    o.require(left == s_models, "CD theta & chi == S");
    o.require(ct::subset(right, target2), "CD theta' & chi |= !phi & psi");
    o.require(ok(cce_sol) && cce_sol.total_size == 4 && cce_sol.chi.is_top(), "CCE size 4 with chi true");

    Vocabulary& v = cd.vocab;
    Triple cd_printed{cnf("beak_pouch", v), cnf("small", v),
                      cnf("(!beak_pouch | !small) & white_body & webbed_feet & !grey_wing", v)};
    Vocabulary& w = cce.vocab;
    Triple cce_printed{cnf("beak_pouch", w), cnf("!beak_pouch & small & grey_wing", w), CnfFormula{}};
    o.require(triple_of(cd_sol) == cd_printed, "CD triple equals printed triple");
    o.require(triple_of(cce_sol) == cce_printed, "CCE triple equals printed triple");
    o.require(cd_oracle.status == OptimalSet::Status::Ok && cd_oracle.total_size == 7 && cd_oracle.contains(cd_printed),
              "oracle confirms CD optimum");
    o.require(cce_oracle.status == OptimalSet::Status::Ok && cce_oracle.total_size == 4 &&
                  cce_oracle.contains(cce_printed),
              "oracle confirms CCE optimum");
    o.detail << "CD " << cd_sol.total_size << " (" << cd_oracle.optima.size() << " optima), CCE "
             << cce_sol.total_size << " (" << cce_oracle.optima.size() << " optima)";
    return o;
}

// ---------------------------------------------------------------------------
// Reduction from exists-forall SAT: phi_in = all p_i, pd_i false; psi_in =
// every pair (p_i, pd_i) has a true member, and xi holds.

struct QbfCase {
    std::size_t n;
    std::size_t m;
    const char* xi;
};

bool exists_forall(const QbfCase& c, Vocabulary& v, const Formula& xi) {
    std::vector<Symbol> syms;
    for (std::size_t i = 1; i <= c.n; ++i) syms.push_back(v.intern("p" + std::to_string(i)));
    for (std::size_t j = 1; j <= c.m; ++j) syms.push_back(v.intern("q" + std::to_string(j)));
    ct::TruthTable tt(syms);
    for (std::size_t x = 0; x < (std::size_t{1} << c.n); ++x) {
        bool all = true;
        for (std::size_t y = 0; y < (std::size_t{1} << c.m) && all; ++y) all = tt.eval(xi, x | (y << c.n));
        if (all) return true;
    }
    return false;
}

Outcome sigma2_reduction() {
    Outcome o;
    const QbfCase cases[] = {
        {1, 1, "p1 | q1"},
        {1, 1, "p1 & q1"},
        {1, 1, "!p1 & (q1 | !q1)"},
        {1, 2, "(p1 | q1) & (!p1 | q2)"},
        {2, 1, "(p1 | q1) & (p2 | !q1)"},
        {2, 1, "(p1 | !q1) & (!p1 | q1)"},
        {2, 2, "(p1 & !p2) | (q1 & q2)"},
        {2, 2, "(p1 | q1) & (!p1 | q2)"},
        {2, 2, "(p1 | p2 | q1) & (!p1 | !q2 | p2)"},
        {2, 2, "(p1 | q1) & (p2 | q2) & (!p1 | !p2)"},
    };
    std::size_t yes = 0, no = 0;
    for (const auto& c : cases) {
        Vocabulary v;
        Formula xi = parse_formula(c.xi, v);
        const bool truth = exists_forall(c, v, xi);
        (truth ? yes : no)++;

        std::vector<Formula> all_false, pairs;
        FormulaSet s;
        for (std::size_t i = 1; i <= c.n; ++i) {
            Formula p = Formula::atom(v.intern("p" + std::to_string(i)));
            Formula pd = Formula::atom(v.intern("pd" + std::to_string(i)));
            all_false.push_back(!p && !pd);
            pairs.push_back(p || pd);
            s.push_back(!p);
            s.push_back(!pd);
        }
        Formula phi = conjoin(all_false);
        Formula psi = conjoin(pairs) && xi;
        const std::string label = std::string(c.xi) + (truth ? " (true)" : " (false)");

        for (ProblemKind kind : {ProblemKind::CD, ProblemKind::CCE}) {
            ProblemInstance inst = kind == ProblemKind::CD ? ProblemInstance::cd(v, s, phi, psi)
                                                           : ProblemInstance::cce(v, s, phi, psi);
            SolveOptions opts;
            opts.shape = OutputShape::Terms;
            Solution sol = harness.solve(inst, opts);
            const std::size_t bound = 3 * c.n;
            if (truth) {
                o.require(ok(sol) && sol.total_size == bound,
                          std::string(to_string(kind)) + " size 3n on " + label);
            } else {
                o.require(!ok(sol) || sol.total_size > bound,
                          std::string(to_string(kind)) + " no size-3n triple on " + label);
            }
            if (ok(sol)) o.require(ct::satisfies_definition(inst, sol.theta, sol.theta_prime, sol.chi), label);
        }

        PartialAssignment base;
        for (const auto& f : s) base.bind(f.operand().symbol(), false);
        auto flip = oracle_min_flip(base, psi);
        o.require((flip && flip->size() == c.n) == truth, "minimum flip set has size n iff true on " + label);
    }
    o.detail << (yes + no) << " instances (" << yes << " true, " << no << " false), n,m <= 2, terms shape";
    return o;
}

// ---------------------------------------------------------------------------

/// The literal set an assignment-defining model set pins down, if the set
/// defines a partial assignment: nonempty, and equal to the models of the
/// literals it entails.
std::optional<std::vector<std::pair<std::size_t, bool>>> defined_literals(const ct::TruthTable& tt,
                                                                         const std::vector<bool>& models) {
    if (ct::empty(models)) return std::nullopt;
    std::vector<std::pair<std::size_t, bool>> lits;
    for (std::size_t i = 0; i < tt.symbols().size(); ++i) {
        bool seen_true = false, seen_false = false;
        for (std::size_t p = 0; p < tt.points(); ++p)
            if (models[p]) ((p >> i & 1U) ? seen_true : seen_false) = true;
        if (seen_true != seen_false) lits.emplace_back(i, seen_true);
    }
    for (std::size_t p = 0; p < tt.points(); ++p) {
        bool agrees = true;
        for (auto [i, value] : lits) agrees = agrees && ((p >> i & 1U) == value);
        if (agrees != models[p]) return std::nullopt;
    }
    return lits;
}

bool is_term(const CnfFormula& f) {
    for (const auto& c : f.clauses)
        if (c.size() != 1) return false;
    return PartialAssignment::from_term(f).has_value();
}

/// weak (a, b)-contrast: a&!b |= t and !a&b does not entail t; likeness: both entail t.
enum class Kind { Weak, Likeness, Other };
Kind classify_clause(const ct::TruthTable& tt, const Clause& c, const std::vector<bool>& a, const std::vector<bool>& b) {
    CnfFormula unit{{c}};
    auto t = tt.models(unit);
    bool first = ct::subset(ct::both(a, ct::negate(b)), t);
    bool second = ct::subset(ct::both(ct::negate(a), b), t);
    if (first && second) return Kind::Likeness;
    if (first) return Kind::Weak;
    return Kind::Other;
}

Outcome property_suites() {
    Outcome o;
    constexpr int kPerSuite = 200;
    std::size_t classified = 0, partial = 0, total = 0, flips = 0, cxp = 0;

    {  // clause classification for global and two-input explanations
        ct::InstanceGenerator gen(4, 8, 101);
        for (int i = 0; i < kPerSuite; ++i) {
            ProblemInstance inst = gen.next(i % 2 ? ProblemKind::CE : ProblemKind::GCE);
            Solution sol = harness.solve(inst);
            if (!ok(sol)) continue;
            ++classified;
            const ct::TruthTable& tt = gen.table();
            std::vector<bool> a, b;
            if (inst.kind == ProblemKind::CE) {
                a = tt.models(inst.s);
                b = tt.models(inst.s_prime);
            } else {
                a = tt.models(inst.phi);
                b = tt.models(inst.psi);
            }
            for (const auto& c : sol.theta.clauses)
                o.require(classify_clause(tt, c, a, b) == Kind::Weak, "theta clause weak contrast");
            for (const auto& c : sol.theta_prime.clauses)
                o.require(classify_clause(tt, c, b, a) == Kind::Weak, "theta' clause weak contrast");
            for (const auto& c : sol.chi.clauses)
                o.require(classify_clause(tt, c, a, b) == Kind::Likeness, "chi clause likeness");
        }
    }
    {  // partial-assignment input gives term outputs
        ct::InstanceGenerator gen(4, 8, 102);
        for (int i = 0; i < kPerSuite; ++i) {
            ProblemInstance inst = gen.next(i % 2 ? ProblemKind::CCE : ProblemKind::CD);
            Solution sol = harness.solve(inst);
            if (!ok(sol)) continue;
            ++partial;
            const ct::TruthTable& tt = gen.table();
            o.require(is_term(sol.theta) && is_term(sol.theta_prime), "theta and theta' are terms");
            o.require(defined_literals(tt, ct::both(tt.models(sol.theta), tt.models(sol.chi))).has_value(),
                      "theta & chi defines a partial assignment");
            o.require(defined_literals(tt, ct::both(tt.models(sol.theta_prime), tt.models(sol.chi))).has_value(),
                      "theta' & chi defines a partial assignment");
        }
    }
    {  // total-assignment input gives total-assignment outputs
        ct::InstanceGenerator gen(4, 8, 103);
        for (int i = 0; i < kPerSuite; ++i) {
            ProblemInstance base = gen.next(ProblemKind::GCE);
            FormulaSet s = gen.cube_in(base.target(), false);
            ProblemInstance inst = ProblemInstance::cd(base.vocab, s, base.phi, base.psi);
            Solution sol = harness.solve(inst);
            if (!ok(sol)) continue;
            ++total;
            const ct::TruthTable& tt = gen.table();
            const std::size_t width = tt.symbols().size();
            auto l = defined_literals(tt, ct::both(tt.models(sol.theta), tt.models(sol.chi)));
            auto r = defined_literals(tt, ct::both(tt.models(sol.theta_prime), tt.models(sol.chi)));
            o.require(l && l->size() == width, "theta & chi defines a total assignment");
            o.require(r && r->size() == width, "theta' & chi defines a total assignment");
        }
    }
    {  // counterfactual distance equals the minimum flip set
        ct::InstanceGenerator gen(4, 8, 104);
        for (int i = 0; i < kPerSuite; ++i) {
            ProblemInstance base = gen.next(ProblemKind::GCE);
            Formula phi = base.phi;
            Formula psi = i % 2 ? !phi : base.psi;
            if (i % 2) ++cxp;
            FormulaSet s = gen.cube_in(phi && !psi, false);
            ProblemInstance inst = ProblemInstance::cd(base.vocab, s, phi, psi);
            Solution sol = harness.solve(inst);
            if (!ok(sol)) continue;
            const ct::TruthTable& tt = gen.table();
            auto s_lits = defined_literals(tt, tt.models(s));
            auto r = defined_literals(tt, ct::both(tt.models(sol.theta_prime), tt.models(sol.chi)));
            if (!s_lits || s_lits->size() != tt.symbols().size()) continue;  // target had no model
            ++flips;
            o.require(r && r->size() == tt.symbols().size(), "counterfactual is a total assignment");
            if (!r) continue;
            std::size_t distance = 0;
            PartialAssignment sa;
            for (std::size_t k = 0; k < s_lits->size(); ++k) {
                distance += (*s_lits)[k].second != (*r)[k].second;
                sa.bind(tt.symbols()[(*s_lits)[k].first], (*s_lits)[k].second);
            }
            auto flip = oracle_min_flip(sa, inst.counter_target());
            o.require(flip && flip->size() == distance, "flip distance equals minimum flip set");
        }
    }
    const std::size_t floor = kPerSuite / 4;
    o.require(classified >= floor && partial >= floor && total >= floor && flips >= floor,
              "each suite solved at least a quarter of its instances");
    o.detail << "ok solutions checked: classification " << classified << ", partial " << partial << ", total " << total
             << ", flips " << flips << " (of " << kPerSuite << " each; " << cxp << " with psi = !phi)";
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const ProblemKind kinds[] = {ProblemKind::CE, ProblemKind::GCE, ProblemKind::SEP, ProblemKind::CCE,
                                 ProblemKind::CD};
    EnumerationBudget budget;
    budget.max_total_size = 24;
    std::size_t compared = 0, solved = 0, same_choice = 0;
    for (ProblemKind kind : kinds) {
        ct::InstanceGenerator gen(3, 6, 200 + static_cast<std::uint64_t>(kind));
        for (int i = 0; i < 100; ++i) {
            ProblemInstance inst = gen.next(kind);
            OptimalSet oracle = oracle_solve(inst, budget);
            Solution sol = harness.solve(inst);
            const std::string where = std::string(to_string(kind)) + " #" + std::to_string(i);
            o.require(oracle.status != OptimalSet::Status::BudgetExceeded, where + " oracle within budget");
            ++compared;
            const bool oracle_ok = oracle.status == OptimalSet::Status::Ok;
            o.require(oracle_ok == ok(sol), where + " status agrees");
            if (!oracle_ok || !ok(sol)) continue;
            ++solved;
            o.require(sol.total_size == oracle.total_size && sol.chi_size == oracle.chi_size,
                      where + " optimum agrees");
            o.require(oracle.contains(triple_of(sol)), where + " solver triple is an oracle optimum");
            same_choice += !oracle.optima.empty() && oracle.optima.front() == triple_of(sol);
        }
    }
    o.detail << compared << " instances, " << solved << " with a triple; solver picked the oracle's first optimum in "
             << same_choice << "/" << solved;
    return o;
}

Outcome pipeline_fixture() {
    Outcome o;
    Json golden = Json::parse(ct::read_fixture("pipeline_expected.json"));
    std::string out = harness.cli({"pipeline", "--tree", std::string(CONTRASTIX_FIXTURE_DIR) + "/tree.json",
                                   "--instance", std::string(CONTRASTIX_FIXTURE_DIR) + "/instance.json",
                                   "--class-a", "versicolor", "--class-b", "virginica", "--format", "json"});
    o.require(harness.last_exit() == cli::kExitOk, "pipeline exit code 0");
    Json got;
    try {
        got = Json::parse(out);
    } catch (const std::exception&) {
        o.require(false, "pipeline output is JSON");
        return o;
    }
    for (auto [key, kind] : {std::pair{"gce", ProblemKind::GCE}, std::pair{"cce", ProblemKind::CCE},
                             std::pair{"cd", ProblemKind::CD}}) {
        const Json& want = golden[key];
        const Json& have = got[key];
        // The checked-in file must still be what the oracle derives.
        ProblemInstance inst = ct::fixture_problem(kind);
        o.require(to_json(oracle_solve(inst, {}), inst.vocab).dump() == want.dump(),
                  std::string(key) + " golden file is current");
        for (const char* field : {"status", "theta", "theta_prime", "chi", "total_size", "chi_size", "optimal"})
            o.require(have[field] == want[field], std::string(key) + "." + field);
        bool listed = false;
        for (const auto& t : want["all_optima"])
            listed = listed || (t["theta"] == have["theta"] && t["theta_prime"] == have["theta_prime"] &&
                                t["chi"] == have["chi"]);
        o.require(listed, std::string(key) + " triple among oracle optima");
        o.require(have["verification"]["all_ok"] == true, std::string(key) + " verification");
    }
    o.detail << "gce " << got["gce"]["total_size"] << ", cce " << got["cce"]["total_size"] << ", cd "
             << got["cd"]["total_size"];
    return o;
}

Outcome determinism() {
    Outcome o;
    o.require(harness.mismatches() == 0, std::to_string(harness.mismatches()) + " runs differ");
    o.detail << harness.runs() << " runs compared at --jobs 1 and --jobs 8, " << harness.mismatches()
             << " differ";
    return o;
}

struct Criterion {
    const char* name;
    std::chrono::seconds limit;
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"counting-ce", std::chrono::seconds(5), counting_ce},
        {"counting-gce", std::chrono::minutes(10), counting_gce},
        {"counting-sep", std::chrono::seconds(60), counting_sep},
        {"seabird", std::chrono::seconds(60), seabird},
        {"sigma2-reduction", std::chrono::seconds(60), sigma2_reduction},
        {"property-suites", std::chrono::minutes(15), property_suites},
        {"oracle-equivalence", std::chrono::minutes(15), oracle_equivalence},
        {"pipeline-fixture", std::chrono::minutes(2), pipeline_fixture},
        {"determinism", std::chrono::minutes(1), determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const auto elapsed = std::chrono::duration<double>(Clock::now() - start);
        o.require(elapsed < c.limit, "runtime limit");
        failures += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << " (" << std::fixed;
        std::cout.precision(2);
        std::cout << elapsed.count() << " s): " << o.detail.str() << "\n" << std::flush;
    }
    return failures == 0 ? 0 : 1;
}
