#include "golden_runner.hpp"
#include "hwpl_cli.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <sys/wait.h>

using hwpl::cli::Job;
using hwpl::cli::parse_args;
using hwpl::cli::run;

namespace {

struct Captured {
    int code;
    std::string out;
    std::string err;
};

Captured call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

/// Runs the real binary; stderr is discarded.
Captured spawn(const std::string& args) {
    const std::string cmd = std::string(HWPL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}, {}};
    std::string out;
    std::array<char, 4096> buf{};
    while (const auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, {}};
}

} // namespace

TEST(ParseArgs, SimpleCommand) {
    const auto job = parse_args({"f", "--n", "1"});
    EXPECT_EQ(job.command, "f");
    EXPECT_EQ(job.opts.at("n"), std::vector<std::string>{"1"});
    EXPECT_EQ(job.format, "text");
}

TEST(ParseArgs, ElementsWithSemicolons) {
    const auto job = parse_args({"hall", "ext-lines", "--weights", "2,2,2", "--base", "0,0,0;0", "--offset", "0,0,0;0",
                                 "--l1", "1,1,1;-2", "--l2", "0,0,0;0"});
    EXPECT_EQ(job.command, "hall ext-lines");
    EXPECT_EQ(job.opts.at("l1").front(), "1,1,1;-2");
}

TEST(ParseArgs, VerifySuite) {
    const auto job = parse_args({"verify", "--suite", "green", "--p", "2", "--q", "2", "--max-dim", "3"});
    EXPECT_EQ(job.command, "verify");
    EXPECT_EQ(job.opts.at("suite").front(), "green");
    EXPECT_EQ(job.opts.at("max-dim").front(), "3");
}

TEST(ParseArgs, NegativeValues) {
    const auto job = parse_args({"f", "--n", "-3"});
    EXPECT_EQ(job.opts.at("n").front(), "-3");
}

TEST(ParseArgs, UsageErrors) {
    EXPECT_THROW(parse_args({}), hwpl::cli::UsageError);
    EXPECT_THROW(parse_args({"f", "--bogus", "1"}), hwpl::cli::UsageError);
    EXPECT_THROW(parse_args({"frobnicate"}), hwpl::cli::UsageError);
    EXPECT_THROW(parse_args({"f", "--n", "1", "--format", "xml"}), hwpl::cli::UsageError);
}

TEST(Execute, SpecExamples) {
    EXPECT_EQ(call({"f", "--n", "1"}).out, "q - 2\n");
    EXPECT_EQ(call({"s", "--n", "0", "--k", "3"}).out, "q^2 - 2*q + 1\n");
    const auto v = call({"verify", "--suite", "s-enum", "--q", "5", "--n", "1", "--k", "0"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("enumerated 3 vs closed-form 3, verdict true"), std::string::npos);
}

TEST(Execute, ExitCodes) {
    EXPECT_EQ(call({"s", "--n", "1", "--k", "5"}).code, 2);
    EXPECT_EQ(call({"s", "--n", "1"}).code, 1);
    EXPECT_EQ(call({"lgroup", "normal-form", "--weights", "2,3", "--element", "1,?;0"}).code, 1);
    EXPECT_EQ(call({"f", "--n", "1"}).code, 0);
}

TEST(Execute, RefusalNamesPrecondition) {
    const auto r = call({"hall", "ext-lines", "--weights", "2,3,5", "--base", "0,0,0;0", "--offset", "1,0,0;0", "--l1",
                         "0,0,0;0", "--l2", "0,0,0;0"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("l_1 <= 0"), std::string::npos) << r.err;
}

TEST(Execute, HelpListsEveryCommandWithAnchor) {
    const auto r = call({"--help"});
    EXPECT_EQ(r.code, 0);
    for (const auto& c : hwpl::cli::commands) {
        EXPECT_NE(r.out.find(std::string(c.name) + " -- " + std::string(c.anchor)), std::string::npos) << c.name;
    }
    for (const auto& c : hwpl::quiver_cases) EXPECT_NE(r.out.find(std::string(c.name)), std::string::npos);
}

TEST(Execute, OutWritesFile) {
    const auto path = std::filesystem::temp_directory_path() / "hwpl_test_out.txt";
    const auto r = call({"f", "--n", "2", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(golden::slurp(path.string()), "q^2 - 3*q + 3\n");
    std::filesystem::remove(path);
}

TEST(Records, RoundTrip) {
    const std::vector<std::vector<std::string>> jobs = {
        {"f", "--n", "7"},
        {"s", "--n", "0", "--k", "0"},
        {"s", "--n", "3", "--k", "2"},
        {"euler", "--weights", "2,3,5", "--a", "L:0,0,0;0", "--b", "H:1,2"},
        {"hall", "ext-exceptional", "--weights", "2,2,2", "--e", "EB:0,0,0;0;0,0,0", "--e2", "EB:1,1,1;-2;0,0,0", "--s",
         "E:1,1,2"},
        {"verify", "--suite", "auts", "--p", "2", "--q", "2", "--max-dim", "2"},
    };
    for (const auto& args : jobs) {
        const auto job = parse_args(args);
        const auto report = hwpl::cli::execute(job);
        const auto again = hwpl::cli::parse_records(hwpl::cli::render_records(report));
        EXPECT_TRUE(again == report) << args.front();
    }
}

TEST(Records, LargeCoefficientsAsStrings) {
    const auto job = parse_args({"f", "--n", "3"});
    auto report = hwpl::cli::execute(job);
    const auto big = hwpl::LaurentPoly::q().pow(2) * hwpl::LaurentPoly(hwpl::Integer("123456789012345678901234567890"));
    report.values.front().poly = big;
    report.values.front().text = big.to_string();
    const auto text = hwpl::cli::render_records(report);
    EXPECT_NE(text.find("\"123456789012345678901234567890\""), std::string::npos);
    EXPECT_TRUE(hwpl::cli::parse_records(text) == report);
}

TEST(Determinism, IdenticalOutput) {
    const std::vector<std::string> args = {"verify", "--suite", "green", "--p", "2", "--q", "2", "--max-dim", "3"};
    EXPECT_EQ(call(args).out, call(args).out);
}

TEST(Golden, InProcess) {
    const auto cases = golden::load(HWPL_GOLDEN_DIR);
    ASSERT_GT(cases.size(), 20u);
    for (const auto& c : cases) {
        const auto r = golden::replay(HWPL_GOLDEN_DIR, c);
        EXPECT_TRUE(r.ok) << r.name << ": " << r.detail;
    }
}

TEST(Golden, Binary) {
    const auto r = spawn("f --n 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, golden::slurp(std::string(HWPL_GOLDEN_DIR) + "/f1.out"));
    EXPECT_EQ(spawn("s --n 1 --k 9").code, 2);
    EXPECT_EQ(spawn("f --nope").code, 1);
    EXPECT_EQ(spawn("'hall' 'ext-lines' --weights 2,2,2 --base '0,0,0;0' --offset '0,0,0;0' --l1 '1,1,1;-2' --l2 '0,0,0;0'").out,
              "1\n");
}
