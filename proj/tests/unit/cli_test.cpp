#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "contrastix/json.hpp"
#include "contrastix/solver.hpp"
#include "instances.hpp"

using namespace contrastix;
namespace ct = contrastix::testing;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "contrastix");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(CONTRASTIX_FIXTURE_DIR) + "/" + name; }

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("contrastix_cli_test_" + name);
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(Cli, SepSingleSymbol) {
    Result r = run({"sep", "--phi", "p", "--psi", "!p", "--format", "json"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["theta"], "p");
    EXPECT_EQ(j["total_size"], 1);
}

TEST(Cli, CceEntailedPsiExitsWithDefinitionError) {
    Result r = run({"cce", "--s", "p", "--phi", "p", "--psi", "p & q"});
    EXPECT_EQ(r.code, cli::kExitDefinitionError);
    EXPECT_NE(r.out.find("psi entails phi"), std::string::npos) << r.out;
}

TEST(Cli, RepairFlagAnswersEntailedPsi) {
    Result r = run({"cce", "--s", "p,!q", "--phi", "p", "--psi", "p & q", "--repair"});
    EXPECT_EQ(r.code, cli::kExitOk) << r.out << r.err;
}

TEST(Cli, ZeroBudgetExitsWithTimeout) {
    Result r = run({"gce", "--phi", "p", "--psi", "!p", "--max-total", "0", "--format", "json"});
    EXPECT_EQ(r.code, cli::kExitTimeout);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["status"], "timeout");
    EXPECT_TRUE(j["theta"].is_null());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"gce", "--phi", "p"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"gce", "--phi", "p &", "--psi", "q"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"gce", "--phi", "p", "--psi", "q", "--shape", "dnf"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"cd", "--tree", "/nonexistent/tree.json", "--instance", fixture("instance.json"), "--class-b",
                   "virginica"})
                  .code,
              cli::kExitUsage);
}

TEST(Cli, TextOutputReadsTheTriple) {
    Result r = run({"ce", "--s", "p,q,!r", "--s-prime", "p,!q,!r", "--phi", ct::exactly_two(), "--psi",
                    ct::exactly_one()});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_NE(r.out.find("Because q (and p & !r)"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("Had !q held instead"), std::string::npos) << r.out;
}

TEST(Cli, FormulaFiles) {
    auto phi = write_temp("phi.txt", std::string(ct::exactly_two()) + "\n");
    auto psi = write_temp("psi.txt", ct::exactly_one());
    auto s = write_temp("s.txt", "p\nq\n!r\n");
    Result r = run({"cce", "--phi-file", phi.string(), "--psi-file", psi.string(), "--s-file", s.string(),
                    "--format", "json"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_TRUE(j["verification"]["all_ok"].get<bool>());
}

TEST(Cli, VerifyAcceptsEmittedSolutionAndRejectsCorruption) {
    std::vector<std::string> common{"--phi", ct::exactly_two(), "--psi", ct::exactly_one()};
    std::vector<std::string> args{"gce"};
    args.insert(args.end(), common.begin(), common.end());
    args.insert(args.end(), {"--format", "json"});
    Result solved = run(args);
    ASSERT_EQ(solved.code, cli::kExitOk);
    auto good = write_temp("good.json", solved.out);

    std::vector<std::string> check{"verify", "--kind", "gce", "--solution", good.string()};
    check.insert(check.end(), common.begin(), common.end());
    EXPECT_EQ(run(check).code, cli::kExitOk);

    Json j = Json::parse(solved.out);
    j["chi"] = "true";
    auto bad = write_temp("bad.json", j.dump());
    check[4] = bad.string();
    Result rejected = run(check);
    EXPECT_EQ(rejected.code, cli::kExitDefinitionError);
    EXPECT_NE(rejected.out.find("FAIL"), std::string::npos);
}

TEST(Cli, CdOnFixtureTree) {
    Result r = run({"cd", "--instance", fixture("instance.json"), "--tree", fixture("tree.json"), "--class-a",
                    "versicolor", "--class-b", "virginica", "--shape", "terms", "--format", "json"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["status"], "ok");
    EXPECT_TRUE(j["verification"]["all_ok"].get<bool>());
}

TEST(Cli, PipelineEmitsAllThreeProblems) {
    Result r = run({"pipeline", "--tree", fixture("tree.json"), "--instance", fixture("instance.json"), "--class-b",
                    "virginica", "--format", "json"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["class_a"], "versicolor");
    EXPECT_EQ(j["class_b"], "virginica");
    for (const char* key : {"gce", "cce", "cd"}) {
        ASSERT_TRUE(j.contains(key)) << key;
        EXPECT_EQ(j[key]["status"], "ok") << key;
    }
}

TEST(Cli, JobsFlagDoesNotChangeOutput) {
    std::vector<std::string> base{"gce", "--phi", ct::exactly_two(), "--psi", ct::exactly_one(), "--format", "json"};
    auto one = base, eight = base;
    one.insert(one.end(), {"--jobs", "1"});
    eight.insert(eight.end(), {"--jobs", "8"});
    EXPECT_EQ(run(one).out, run(eight).out);
}

TEST(FormatText, ErrorSolution) {
    Vocabulary v;
    Solution sol;
    sol.status = SolveStatus::Error;
    sol.message = "phi & psi is satisfiable";
    EXPECT_EQ(cli::format_text(sol, v), "no contrastive explanation exists: phi & psi is satisfiable\n");
}

TEST(FormatText, TopChiOmitsLikenessPart) {
    Vocabulary v;
    Solution sol = solve_gce(v, ct::parse("p", v), ct::parse("!p", v));
    std::string text = cli::format_text(sol, v);
    EXPECT_EQ(text.find("(and"), std::string::npos) << text;
    EXPECT_EQ(text.find("(with"), std::string::npos) << text;
    EXPECT_NE(text.find("Because p,"), std::string::npos) << text;
}

TEST(FormatText, SeabirdNamesTheDistinguishingFeatures) {
    ProblemInstance inst = ct::seabird(ProblemKind::CD);
    Solution sol = solve(inst);
    std::string text = cli::format_text(sol, inst.vocab);
    EXPECT_NE(text.find("small"), std::string::npos) << text;
    EXPECT_NE(text.find("beak_pouch"), std::string::npos) << text;
}
