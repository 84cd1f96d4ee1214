#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "quasiham/cli.hpp"

namespace qc = quasiham::cli;
namespace fs = std::filesystem;

namespace {

qc::RunConfig config(const std::string& command, const std::string& algebra, std::size_t m) {
    qc::RunConfig c;
    c.command = command;
    c.algebra = algebra;
    c.m = m;
    return c;
}

fs::path write_temp(const std::string& name, const std::string& text) {
    const auto p = fs::temp_directory_path() / ("quasiham_cli_test_" + std::to_string(::getpid()) + "_" + name);
    std::ofstream(p) << text;
    return p;
}

bool has_line(const std::string& report, const std::string& line) {
    std::istringstream in(report);
    std::string l;
    while (std::getline(in, l))
        if (l == line) return true;
    return false;
}

struct Process {
    int exit_code;
    std::string out;
};

Process run_binary(const std::string& args) {
    const std::string cmd = std::string(QUASIHAM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, HeaderEchoesInputs) {
    auto c = config("verify-perfect", "f2", 3);
    c.seed = 42;
    c.budget = 4096;
    const auto r = qc::run(c);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.report.rfind("command: verify-perfect\nalgebra: F_2\n", 0), 0u) << r.report;
    EXPECT_TRUE(has_line(r.report, "seed: 42"));
    EXPECT_TRUE(has_line(r.report, "budget: 4096"));
    EXPECT_TRUE(has_line(r.report, "m: 3"));
    EXPECT_TRUE(has_line(r.report, "digest: " + quasiham::parse_algebra_spec("f2").digest));
    EXPECT_TRUE(has_line(r.report, "|C|: 16"));
    EXPECT_TRUE(has_line(r.report, "ambient: 128"));
    EXPECT_TRUE(has_line(r.report, "covering_identity: true"));
    EXPECT_TRUE(has_line(r.report, "exit: 0"));
}

TEST(Cli, DeterministicReports) {
    for (const auto& cmd : qc::commands()) {
        auto c = config(cmd, "quaternions", 2);
        c.trials = 20;
        c.seed = 9;
        if (cmd == "syndrome" || cmd == "decode" || cmd == "membership-reduce") c.in = write_temp("det.txt", "(1, 0) := i\n(0, 1) := j\n").string();
        const auto a = qc::run(c), b = qc::run(c);
        EXPECT_EQ(a.report, b.report) << cmd;
        EXPECT_EQ(a.exit_code, b.exit_code) << cmd;
    }
}

TEST(Cli, ExitCodesFollowVerdicts) {
    EXPECT_EQ(qc::run(config("audit", "gf9-isotope", 2)).exit_code, 0);
    EXPECT_EQ(qc::run(config("nonassoc-witness", "gf9-isotope", 2)).exit_code, 0);
    EXPECT_EQ(qc::run(config("nonassoc-witness", "f5", 2)).exit_code, 0);
    EXPECT_EQ(qc::run(config("right-linearity", "quaternions", 2)).exit_code, 0);
    EXPECT_EQ(qc::run(config("distinguish", "f3", 2)).exit_code, 0);
    EXPECT_EQ(qc::run(config("choice-iso", "f3", 2)).exit_code, 0);
    EXPECT_EQ(qc::run(config("basis-iso", "f2", 3)).exit_code, 0);
    // module axioms over a nonassociative algebra fail: a counterexample
    auto rc = config("reconstruct-check", "octonions", 2);
    rc.mode = "sampled";
    rc.trials = 200;
    const auto r = qc::run(rc);
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_TRUE(has_line(r.report, "verdict: fail"));
    // a table that is not distributive is not a quasifield
    const auto spec = write_temp("bad.json", R"({"kind": "cayley-table", "tables": {"add": [[0,1,2,3,4],[1,2,3,4,0],[2,3,4,0,1],[3,4,0,1,2],[4,0,1,2,3]], "mul": [[0,0,0,0,0],[0,1,2,3,4],[0,2,1,4,3],[0,3,4,1,2],[0,4,3,2,1]]}})");
    const auto audit = qc::run(config("audit", spec.string(), 2));
    EXPECT_EQ(audit.exit_code, 1);
    EXPECT_TRUE(has_line(audit.report, "quasifield: no"));
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(qc::run(config("frobnicate", "f2", 2)).exit_code, 2);
    EXPECT_EQ(qc::run(config("columns", "f6", 2)).exit_code, 2);
    EXPECT_EQ(qc::run(config("columns", "f2", 1)).exit_code, 2);
    EXPECT_EQ(qc::run(config("columns", "quaternions", 2)).exit_code, 2);
    EXPECT_EQ(qc::run(config("decode", "f2", 3)).exit_code, 2);  // no --in
    auto bad_mode = config("verify-perfect", "f2", 3);
    bad_mode.mode = "sampled";
    EXPECT_EQ(qc::run(bad_mode).exit_code, 2);
    const auto spec = write_temp("row.json", R"({"kind": "cayley-table", "tables": {"add": [[0,1],[1,0]], "mul": [[0,0],[0,0]]}})");
    const auto r = qc::run(config("audit", spec.string(), 2));
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.report.find("row 1"), std::string::npos) << r.report;
}

TEST(Cli, DecodeEchoesCodewordAndCorrectsErrors) {
    const auto cw = write_temp("cw.txt", "(1, 0) := 1\n(0, 1) := i\n(1, i) := -1\n");
    auto c = config("decode", "quaternions", 2);
    c.in = cw.string();
    auto r = qc::run(c);
    EXPECT_EQ(r.exit_code, 0) << r.report;
    EXPECT_TRUE(has_line(r.report, "distance: 0"));
    const auto err = write_temp("err.txt", "(1, 1, 0) := 1\n(1, 0, 0) := 1\n");
    c = config("decode", "f2", 3);
    c.in = err.string();
    r = qc::run(c);
    EXPECT_TRUE(has_line(r.report, "distance: 1"));
    EXPECT_TRUE(has_line(r.report, "(0, 1, 0) := 1"));
}

TEST(Cli, SyndromeAndMembership) {
    const auto x = write_temp("x.txt", "(1, 0, 0) := 1\n(0, 1, 0) := 1\n(1, 1, 0) := 1\n");
    auto c = config("syndrome", "f2", 3);
    c.in = x.string();
    auto r = qc::run(c);
    EXPECT_TRUE(has_line(r.report, "syndrome: (0, 0, 0)"));
    EXPECT_TRUE(has_line(r.report, "codeword: true"));
    c.command = "membership-reduce";
    r = qc::run(c);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(has_line(r.report, "membership_by_reduction: true"));
}

TEST(Cli, ColumnsAndGenerators) {
    auto r = qc::run(config("columns", "f3", 2));
    EXPECT_NE(r.report.find("count: 4\n(1, 0)\n(1, 1)\n(1, 2)\n(0, 1)\n"), std::string::npos) << r.report;
    r = qc::run(config("columns", "gf9-isotope", 2));
    EXPECT_TRUE(has_line(r.report, "count: 10"));
    r = qc::run(config("generators", "f2", 3));
    EXPECT_TRUE(has_line(r.report, "count: 7"));
    EXPECT_EQ(qc::run(config("generators", "quaternions", 2)).exit_code, 0);
}

TEST(Cli, SupportWitnessFromColumnList) {
    const auto cols = write_temp("cols.txt", "# three columns\n(1, 0)\n(0, 1)\n(1, 1)\n");
    auto c = config("support-witness", "quaternions", 2);
    c.in = cols.string();
    const auto r = qc::run(c);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(has_line(r.report, "columns: 3"));
    EXPECT_TRUE(has_line(r.report, "witness:"));
    EXPECT_TRUE(has_line(qc::run(config("support-witness", "f2", 3)).report, "witness: none"));
}

TEST(Cli, PivotOverride) {
    auto c = config("columns", "f3", 2);
    c.pivots = "2,2";
    const auto r = qc::run(c);
    EXPECT_NE(r.report.find("(2, 0)\n(2, 1)\n(2, 2)\n(0, 2)\n"), std::string::npos) << r.report;
    c.command = "verify-perfect";
    EXPECT_EQ(qc::run(c).exit_code, 0);
}

TEST(CliBinary, VerifyPerfectExitsZero) {
    const auto p = run_binary("verify-perfect --algebra f2 --m 3 --mode exhaustive");
    EXPECT_EQ(p.exit_code, 0) << p.out;
    EXPECT_TRUE(has_line(p.out, "covering_identity: true"));
    EXPECT_TRUE(has_line(p.out, "|C|: 16"));
}

TEST(CliBinary, NonassocWitnessOnIsotope) {
    const auto p = run_binary("nonassoc-witness --algebra gf9-isotope --m 2");
    EXPECT_EQ(p.exit_code, 0) << p.out;
    EXPECT_TRUE(has_line(p.out, "verdict: pass"));
}

TEST(CliBinary, UsageAndOutFile) {
    EXPECT_EQ(run_binary("").exit_code, 2);
    EXPECT_EQ(run_binary("columns --m notanumber").exit_code, 2);
    EXPECT_EQ(run_binary("columns --jobs 0").exit_code, 2);
    const auto out = fs::temp_directory_path() / ("quasiham_cli_test_" + std::to_string(::getpid()) + "_out.txt");
    const auto p = run_binary("columns --algebra f3 --m 2 --out " + out.string());
    EXPECT_EQ(p.exit_code, 0);
    EXPECT_TRUE(p.out.empty());
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), qc::run(config("columns", "f3", 2)).report);
    EXPECT_EQ(run_binary("columns --algebra f3 --m 2").out, buf.str());
}
