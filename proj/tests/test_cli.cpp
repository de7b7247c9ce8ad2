#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Invocation {
    int status = -1;
    std::string out;
};

Invocation run(const std::string& args) {
    const std::string cmd = std::string(SPLICE_CLI) + " " + args + " 2>/dev/null";
    Invocation result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

}  // namespace

TEST(Cli, MuTable) {
    const Invocation r = run("mu-table --p 7 --f 2 --r 2,3 --emit tsv");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("1\t+x-1\t-x+5\t01\t28\t(1,2)(x)det^28"), std::string::npos) << r.out;
    EXPECT_EQ(run("mu-table --p 7 --f 3").status, 0);
}

TEST(Cli, VerifyLemmas) {
    EXPECT_EQ(run("verify-lemmas --p 5,7 --f 2,3").status, 0);
    EXPECT_EQ(run("verify-lemmas --p 7 --f 1").status, 2);
    const Invocation point = run("verify-lemmas --p 7 --f 2 --r 2,3");
    EXPECT_EQ(point.status, 0);
    EXPECT_NE(point.out.find("\"m\": 28"), std::string::npos);
    EXPECT_EQ(run("verify-lemmas --p 7 --f 2 --r 0,3").status, 2);
}

TEST(Cli, VerifyIsByteStableAcrossJobs) {
    const Invocation a = run("verify-lemmas --p 5,7 --f 2,3 --jobs 1");
    const Invocation b = run("verify-lemmas --p 5,7 --f 2,3 --jobs 3");
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, run("verify-lemmas --p 5,7 --f 2,3 --jobs 1").out);
}

TEST(Cli, BuildSpliced) {
    const Invocation json = run("build-spliced --p 7 --f 2 --r 2,3");
    EXPECT_EQ(json.status, 0);
    EXPECT_NE(json.out.find("\"length\": 14"), std::string::npos);
    const Invocation dot = run("build-spliced --p 7 --f 2 --r 2,3 --format dot");
    EXPECT_EQ(dot.status, 0);
    EXPECT_EQ(dot.out.rfind("graph", 0), 0u);
    EXPECT_EQ(run("build-spliced --p 7 --f 2 --r 2,3 --format svg").status, 2);
}

TEST(Cli, ClosureExpectations) {
    EXPECT_EQ(run("closure --p 7 --f 2 --r 2,3 --lambda const1 --start sigma:e0 --expect full").status, 0);
    EXPECT_EQ(run("closure --p 7 --f 2 --r 2,3 --lambda const1 --start sigma:e0-e1 --expect proper").status, 0);
    EXPECT_EQ(run("closure --p 7 --f 2 --r 2,3 --lambda geometric --window 8 --expect full").status, 0);
    EXPECT_EQ(run("closure --p 7 --f 2 --r 2,3 --lambda const1 --start sigma:e0-e1 --expect full").status, 1);
}

TEST(Cli, ClosureUsageErrors) {
    EXPECT_EQ(run("closure --p 7 --f 2 --r 2,3 --lambda nosuchfile").status, 2);
    EXPECT_EQ(run("closure --p 7 --f 2 --r 2,3 --start sigma:0").status, 2);
    EXPECT_EQ(run("closure --p 7 --f 2 --r 2,3 --start tau:e0").status, 2);
    EXPECT_EQ(run("closure --p 7 --f 2 --r 2,3 --start sigma:e0-e0").status, 2);
    EXPECT_EQ(run("closure --p 7 --f 2 --r 2,3 --start sigma:e20").status, 2);

    const std::string path = testing::TempDir() + "lambda_short.txt";
    std::ofstream(path) << "0 1\n1 2\n";
    EXPECT_EQ(run("closure --p 7 --f 2 --r 2,3 --lambda " + path).status, 2);
    const std::string bad = testing::TempDir() + "lambda_bad.txt";
    std::ofstream(bad) << "0 zero\n";
    EXPECT_EQ(run("closure --p 7 --f 2 --r 2,3 --lambda " + bad).status, 2);
}

TEST(Cli, ClosureFromFileMatchesPreset) {
    const std::string path = testing::TempDir() + "lambda_one.txt";
    {
        std::ofstream out(path);
        for (int i = -48; i <= 48; ++i) out << i << " 1\n";
    }
    const Invocation file = run("closure --p 7 --f 2 --r 2,3 --lambda " + path);
    const Invocation preset = run("closure --p 7 --f 2 --r 2,3 --lambda const1");
    EXPECT_EQ(file.status, 0);
    EXPECT_EQ(file.out, preset.out);
}

TEST(Cli, ClosureRandomIsSeeded) {
    const Invocation a = run("--seed 4 closure --p 7 --f 2 --r 2,3 --lambda random");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, run("--seed 4 closure --p 7 --f 2 --r 2,3 --lambda random").out);
    EXPECT_NE(a.out, run("--seed 5 closure --p 7 --f 2 --r 2,3 --lambda random").out);
}

TEST(Cli, GlnChi) {
    const Invocation r = run("gln-chi --p 5 --f 2 --r 1,1 --n 4");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("all-m-regular"), std::string::npos);
    EXPECT_EQ(run("gln-chi --p 5 --f 2 --r 1,1 --n 2").status, 2);
}

TEST(Cli, Usage) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("mu-table --p 7").status, 2);
    EXPECT_EQ(run("mu-table --p 8 --f 2").status, 2);
    EXPECT_EQ(run("--help").status, 0);
}
