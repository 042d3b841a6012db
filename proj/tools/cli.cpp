#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "contrastix/ingest.hpp"
#include "contrastix/json.hpp"
#include "contrastix/parser.hpp"
#include "contrastix/solver.hpp"

namespace contrastix::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Inputs {
    std::string phi, psi, phi_file, psi_file;
    std::vector<std::string> s, s_prime;
    std::string s_file, s_prime_file;
    std::string tree, instance, class_a, class_b;
    std::string shape = "cnf";
    std::string strategy = "auto";
    std::string format = "text";
    std::size_t max_total = 0;
    bool has_max_total = false;
    double timeout = 0.0;
    bool repair = false;
    bool no_repair = false;
    unsigned jobs = 1;
    std::string solution;
    std::string kind;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> out;
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    }
    return out;
}

std::uint64_t seed_from_env() {
    const char* raw = std::getenv("CONTRASTIX_SEED");
    if (!raw || !*raw) return 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0') throw UsageError("CONTRASTIX_SEED must be a non-negative integer");
    return v;
}

SolveOptions options_from(const Inputs& in) {
    SolveOptions o;
    o.shape = in.shape == "terms" ? OutputShape::Terms : OutputShape::Cnf;
    o.strategy = in.strategy == "exhaustive" ? Strategy::Exhaustive
                 : in.strategy == "cegar"    ? Strategy::Cegar
                                             : Strategy::Auto;
    if (in.has_max_total) o.max_total = in.max_total;
    if (in.timeout > 0) o.deadline = std::chrono::milliseconds(static_cast<long long>(in.timeout * 1000.0));
    o.repair = in.repair;
    o.jobs = std::max(1U, in.jobs);
    o.seed = seed_from_env();
    return o;
}

// Builds the instance from inline formulas, files, or a tree plus feature instance.
class InstanceReader {
public:
    explicit InstanceReader(const Inputs& in) : in_(in) {}

    ProblemInstance read(ProblemKind kind) {
        ProblemInstance inst;
        inst.kind = kind;
        if (!in_.tree.empty()) load_tree_inputs();
        inst.phi = formula(in_.phi, in_.phi_file, tree_phi_, "--phi");
        inst.psi = formula(in_.psi, in_.psi_file, tree_psi_, "--psi");
        if (inst.uses_s()) inst.s = set(in_.s, in_.s_file, tree_s_, "--s");
        if (inst.uses_s_prime()) inst.s_prime = set(in_.s_prime, in_.s_prime_file, std::nullopt, "--s-prime");
        inst.vocab = vocab_;
        return inst;
    }

    Vocabulary& vocab() { return vocab_; }
    [[nodiscard]] const std::string& class_a() const { return class_a_; }
    [[nodiscard]] const std::string& class_b() const { return in_.class_b; }
    [[nodiscard]] const FormulaSet& tree_s() const { return *tree_s_; }

private:
    void load_tree_inputs() {
        TreeModel tree = load_tree(read_file(in_.tree));
        pivot_symbols(tree, vocab_);
        if (!in_.instance.empty()) {
            FeatureInstance fi = load_instance(read_file(in_.instance));
            PartialAssignment a = booleanize(tree, fi.features, vocab_);
            FormulaSet s;
            for (const auto& [sym, value] : a.bindings())
                s.push_back(value ? Formula::atom(sym) : !Formula::atom(sym));
            tree_s_ = std::move(s);
            class_a_ = in_.class_a.empty() ? classify(tree, a, vocab_) : in_.class_a;
        } else {
            class_a_ = in_.class_a;
        }
        if (!class_a_.empty()) {
            if (!tree.has_class(class_a_)) throw UsageError("unknown class " + class_a_);
            tree_phi_ = class_formula(tree, class_a_, vocab_);
        }
        if (!in_.class_b.empty()) {
            if (!tree.has_class(in_.class_b)) throw UsageError("unknown class " + in_.class_b);
            tree_psi_ = class_formula(tree, in_.class_b, vocab_);
        }
    }

    Formula formula(const std::string& inline_text, const std::string& file, const std::optional<Formula>& fallback,
                    const char* flag) {
        if (!inline_text.empty()) return parse_formula(inline_text, vocab_);
        if (!file.empty()) return parse_formula(read_file(file), vocab_);
        if (fallback) return *fallback;
        throw UsageError(std::string(flag) + " is required");
    }

    FormulaSet set(const std::vector<std::string>& inline_items, const std::string& file,
                   const std::optional<FormulaSet>& fallback, const char* flag) {
        if (!inline_items.empty() || !file.empty()) {
            FormulaSet out;
            for (const auto& t : inline_items) out.push_back(parse_formula(t, vocab_));
            if (!file.empty())
                for (const auto& line : read_lines(file)) out.push_back(parse_formula(line, vocab_));
            return out;
        }
        if (fallback) return *fallback;
        throw UsageError(std::string(flag) + " is required");
    }

    const Inputs& in_;
    Vocabulary vocab_;
    std::optional<Formula> tree_phi_, tree_psi_;
    std::optional<FormulaSet> tree_s_;
    std::string class_a_;
};

int exit_code(const Solution& sol) {
    switch (sol.status) {
        case SolveStatus::Ok: return kExitOk;
        case SolveStatus::Error: return kExitDefinitionError;
        case SolveStatus::Timeout: return sol.has_triple ? kExitOk : kExitTimeout;
    }
    return kExitOk;
}

void add_inputs(CLI::App* sub, Inputs& in) {
    sub->add_option("--phi", in.phi, "phi as a formula");
    sub->add_option("--psi", in.psi, "psi as a formula");
    sub->add_option("--phi-file", in.phi_file, "file holding phi");
    sub->add_option("--psi-file", in.psi_file, "file holding psi");
    sub->add_option("--s", in.s, "formulas of S (comma separated, repeatable)")->delimiter(',');
    sub->add_option("--s-file", in.s_file, "file with one formula of S per line");
    sub->add_option("--s-prime", in.s_prime, "formulas of S' (comma separated, repeatable)")->delimiter(',');
    sub->add_option("--s-prime-file", in.s_prime_file, "file with one formula of S' per line");
    sub->add_option("--tree", in.tree, "decision tree JSON");
    sub->add_option("--instance", in.instance, "feature instance JSON (becomes S)");
    sub->add_option("--class-a", in.class_a, "class giving phi (default: predicted class)");
    sub->add_option("--class-b", in.class_b, "class giving psi");
}

void add_solver_flags(CLI::App* sub, Inputs& in) {
    sub->add_option("--shape", in.shape, "output shape")->check(CLI::IsMember({"cnf", "terms"}));
    sub->add_option("--strategy", in.strategy, "search strategy")
        ->check(CLI::IsMember({"auto", "exhaustive", "cegar"}));
    sub->add_option("--max-total", in.max_total, "largest total size to try");
    sub->add_option("--timeout", in.timeout, "wall-clock limit in seconds")->check(CLI::NonNegativeNumber);
    sub->add_option("--jobs", in.jobs, "worker threads")->check(CLI::Range(1U, 1024U));
    sub->add_option("--format", in.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

std::string literal_text(const Formula& f, const Vocabulary& vocab) { return to_string(f, vocab); }

void print_solution(const Solution& sol, const Vocabulary& vocab, const Inputs& in, std::ostream& out) {
    if (in.format == "json")
        out << to_json(sol, vocab).dump(2) << "\n";
    else
        out << format_text(sol, vocab);
}

int run_solve(ProblemKind kind, const Inputs& in, std::ostream& out) {
    InstanceReader reader(in);
    ProblemInstance inst = reader.read(kind);
    Solution sol = solve(inst, options_from(in));
    print_solution(sol, inst.vocab, in, out);
    return exit_code(sol);
}

int run_verify(const Inputs& in, std::ostream& out) {
    if (in.kind.empty()) throw UsageError("--kind is required");
    if (in.solution.empty()) throw UsageError("--solution is required");
    InstanceReader reader(in);
    ProblemInstance inst = effective_instance(reader.read(parse_problem_kind(in.kind)), options_from(in));
    Json j;
    try {
        j = Json::parse(read_file(in.solution));
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("invalid solution JSON: ") + e.what());
    }
    Solution sol = solution_from_json(j, inst.vocab);
    VerificationReport report = verify_solution(inst, sol);
    if (in.format == "json") {
        out << to_json(report).dump(2) << "\n";
    } else {
        for (const auto& [name, ok] : report.conditions) out << (ok ? "ok    " : "FAIL  ") << name << "\n";
    }
    return report.all_ok() ? kExitOk : kExitDefinitionError;
}

int run_pipeline(const Inputs& in, std::ostream& out) {
    if (in.tree.empty() || in.instance.empty()) throw UsageError("pipeline needs --tree and --instance");
    if (in.class_b.empty()) throw UsageError("pipeline needs --class-b");
    Inputs adjusted = in;
    adjusted.repair = !in.no_repair;
    InstanceReader reader(adjusted);
    ProblemInstance base = reader.read(ProblemKind::CCE);

    SolveOptions local = options_from(adjusted);
    SolveOptions global = local;
    global.shape = OutputShape::Cnf;

    struct Row {
        const char* name;
        ProblemKind kind;
        Solution sol;
    };
    std::vector<Row> rows;
    for (auto kind : {ProblemKind::GCE, ProblemKind::CCE, ProblemKind::CD}) {
        ProblemInstance inst = base;
        inst.kind = kind;
        if (kind == ProblemKind::GCE) inst.s.clear();
        rows.push_back(Row{kind == ProblemKind::GCE ? "GCE" : kind == ProblemKind::CCE ? "CCE" : "CD", kind,
                           solve(inst, kind == ProblemKind::GCE ? global : local)});
    }

    const Vocabulary& vocab = base.vocab;
    std::vector<std::string> literals;
    for (const auto& f : base.s) literals.push_back(literal_text(f, vocab));

    if (in.format == "json") {
        Json j;
        j["class_a"] = reader.class_a();
        j["class_b"] = reader.class_b();
        j["instance"] = literals;
        for (const auto& r : rows) {
            std::string key = r.name;
            for (auto& ch : key) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            j[key] = to_json(r.sol, vocab);
        }
        out << j.dump(2) << "\n";
    } else {
        out << "classes: " << reader.class_a() << " vs " << reader.class_b() << "\n";
        out << "instance: ";
        for (std::size_t i = 0; i < literals.size(); ++i) out << (i ? ", " : "") << literals[i];
        out << "\n";
        for (const auto& r : rows) {
            out << r.name << "\n";
            if (!r.sol.has_triple) {
                out << "  " << to_string(r.sol.status) << ": " << r.sol.message << "\n";
                continue;
            }
            out << "  theta:  " << to_string(r.sol.theta, vocab) << "\n";
            out << "  theta': " << to_string(r.sol.theta_prime, vocab) << "\n";
            out << "  chi:    " << to_string(r.sol.chi, vocab) << "\n";
            out << "  size:   " << r.sol.total_size << (r.sol.optimal ? "" : " (not proved optimal)") << "\n";
        }
    }
    int code = kExitOk;
    for (const auto& r : rows) code = std::max(code, exit_code(r.sol));
    return code;
}

}  // namespace

std::string format_text(const Solution& sol, const Vocabulary& vocab) {
    std::ostringstream out;
    if (sol.status == SolveStatus::Error) {
        out << "no contrastive explanation exists";
        if (!sol.message.empty()) out << ": " << sol.message;
        out << "\n";
        return out.str();
    }
    if (!sol.has_triple) {
        out << "no explanation found within the limits";
        if (!sol.message.empty()) out << ": " << sol.message;
        out << "\n";
        return out.str();
    }
    const std::string theta = to_string(sol.theta, vocab);
    const std::string theta_prime = to_string(sol.theta_prime, vocab);
    const std::string chi = to_string(sol.chi, vocab);
    out << "Because " << theta;
    if (!sol.chi.is_top()) out << " (and " << chi << ")";
    out << ", it holds that phi and not psi.\n";
    if (!(sol.theta_prime.is_top() && sol.chi.is_top())) {
        out << "Had " << theta_prime << " held instead";
        if (!sol.chi.is_top()) out << " (with " << chi << ")";
        out << ", psi and not phi.\n";
    }
    out << "size: " << sol.total_size << " (theta " << cnf_size(sol.theta) << ", theta' " << cnf_size(sol.theta_prime)
        << ", chi " << sol.chi_size << ")";
    if (!sol.optimal) out << ", not proved optimal";
    out << "\n";
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Size-minimal contrastive explanations for propositional classifiers", "contrastix"};
    app.require_subcommand(1);
    Inputs in;

    struct Entry {
        const char* name;
        const char* help;
        ProblemKind kind;
    };
    const Entry solvers[] = {
        {"ce", "contrastive explanation (needs S and S')", ProblemKind::CE},
        {"gce", "global contrastive explanation", ProblemKind::GCE},
        {"sep", "minimal separator", ProblemKind::SEP},
        {"cce", "counterfactual contrastive explanation (needs S)", ProblemKind::CCE},
        {"cd", "counterfactual difference (needs S)", ProblemKind::CD},
    };
    std::vector<std::pair<CLI::App*, ProblemKind>> solve_cmds;
    for (const auto& e : solvers) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        add_inputs(sub, in);
        add_solver_flags(sub, in);
        sub->add_flag("--repair", in.repair, "replace phi by phi & !psi when psi entails phi");
        solve_cmds.emplace_back(sub, e.kind);
    }
    CLI::App* pipeline = app.add_subcommand("pipeline", "GCE, CCE and CD for a tree, an instance and two classes");
    add_inputs(pipeline, in);
    add_solver_flags(pipeline, in);
    pipeline->add_flag("--no-repair", in.no_repair, "do not repair the class formulas");
    CLI::App* verify = app.add_subcommand("verify", "recheck a solution JSON against an instance");
    add_inputs(verify, in);
    verify->add_option("--kind", in.kind, "problem kind")->check(CLI::IsMember({"ce", "gce", "sep", "cce", "cd"}));
    verify->add_option("--solution", in.solution, "solution JSON file");
    verify->add_flag("--repair", in.repair, "verify against the repaired inputs");
    verify->add_option("--format", in.format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        for (auto* sub : app.get_subcommands()) {
            for (auto* opt : sub->get_options())
                if (opt->check_name("--max-total") && opt->count() > 0) in.has_max_total = true;
        }
        for (const auto& [sub, kind] : solve_cmds)
            if (sub->parsed()) return run_solve(kind, in, out);
        if (pipeline->parsed()) return run_pipeline(in, out);
        if (verify->parsed()) return run_verify(in, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TreeFormatError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const JsonFormatError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace contrastix::cli
