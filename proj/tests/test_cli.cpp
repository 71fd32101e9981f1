#include "etso/spinor.hpp"
#include "etso/table_io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;
using namespace etso;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " ETSO_CLI " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    const int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() / ("etso_cli_" + std::to_string(::getpid()) + "_" +
                                           ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    fs::path dir;
};

}  // namespace

TEST_F(Cli, GoldenSpinorCsv) {
    const auto r = run("tables --kind spinor --s 1/2 --n-max 4 --format csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, slurp(fs::path(ETSO_GOLDEN_DIR) / "spinor_s1_2.csv"));
}

TEST_F(Cli, GoldenCouplingJson) {
    const auto r = run("tables --kind coupling --s 3/2 --format json");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, slurp(fs::path(ETSO_GOLDEN_DIR) / "coupling_s3_2.json"));
    EXPECT_EQ(read_coupling_table(r.out, TableFormat::json).size(), 120u);
}

TEST_F(Cli, GenerationBeyondPrintedTables) {
    const auto r = run("tables --kind spinor --s 5/2 --n-max 2 --format csv");
    EXPECT_EQ(r.status, 0);
    const auto rows = read_spinor_table(r.out, TableFormat::csv);
    EXPECT_EQ(rows.size(), 26u);
    for (const auto& row : rows) EXPECT_EQ(row.norm_squared(), SqrtLinear(1));
}

TEST_F(Cli, ByteIdenticalAcrossRuns) {
    EXPECT_EQ(run("tables --s 3/2 --format text").out, run("tables --s 3/2 --format text").out);
}

TEST_F(Cli, OutputFileAndEnvDirectory) {
    const auto file = dir / "t.json";
    EXPECT_EQ(run("tables --s 1/2 --format json -o " + file.string()).status, 0);
    EXPECT_EQ(read_spinor_table(slurp(file), TableFormat::json).size(), 60u);

    EXPECT_EQ(run("tables --kind coupling --s 1/2 --format csv", "ETSO_OUTPUT_DIR=" + dir.string()).status, 0);
    EXPECT_TRUE(fs::exists(dir / "coupling_s1_2.csv"));
}

TEST_F(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run("tables --s 1/3").status, 2);
    EXPECT_EQ(run("tables --format xml").status, 2);
    EXPECT_EQ(run("tables --kind coupling --s 1").status, 2);
    EXPECT_EQ(run("tables --bogus").status, 2);
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("verify --suite nope").status, 2);
    EXPECT_EQ(run("verify --suite orthonormality --n-theta 0").status, 2);
    EXPECT_EQ(run("eval --s 1/2 --n 1 --l 1 --j 1/2 --m 1/2 /dev/null").status, 2);
}

TEST_F(Cli, NoPartialFileOnFailure) {
    const auto pts = dir / "bad.txt";
    std::ofstream(pts) << "1 0.5 0.5\n1 oops 2\n";
    const auto out = dir / "out.txt";
    EXPECT_EQ(run("eval " + pts.string() + " -o " + out.string()).status, 2);
    EXPECT_FALSE(fs::exists(out));
    for (const auto& e : fs::directory_iterator(dir)) EXPECT_EQ(e.path().filename().string().find(".tmp"), std::string::npos);
}

TEST_F(Cli, VerifyExitCodes) {
    EXPECT_EQ(run("verify --suite gradients --points 5").status, 0);
    EXPECT_EQ(run("verify --suite tables").status, 1);
    const auto allow = std::string(ETSO_DATA_DIR) + "/known_mismatches.tsv";
    const auto report = dir / "report.txt";
    const auto r = run("verify --suite tables --allowlist " + allow + " --report " + report.string());
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("mismatch (documented)"), std::string::npos);
    EXPECT_NE(slurp(report).find("match-alt"), std::string::npos);
}

TEST_F(Cli, EvalMatchesLibrary) {
    const auto pts = dir / "p.txt";
    std::ofstream(pts) << "1.5 0.4 2.0\n\n0 0 0\n";
    const auto r = run("eval --s 3/2 --n 3 --l 1 --j 3/2 --m -1/2 --radial psi --alpha 0 --zeta 1.2 " + pts.string());
    ASSERT_EQ(r.status, 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> got;
    while (std::getline(lines, line)) got.push_back(line);
    ASSERT_EQ(got.size(), 2u);

    const SpinLabels L{HalfInt::from_twice(3), 1, HalfInt::from_twice(3), HalfInt::from_twice(-1)};
    const auto v = eval_spinor(assemble_psi(L, 3), RadialFamily{RadialKind::psi_alpha, 0, 1.2}, 1.5, 0.4, 2.0);
    std::istringstream first(got[0]);
    std::string pair;
    std::size_t c = 0;
    while (first >> pair) {
        ASSERT_LT(c, v.size());
        const auto comma = pair.find(',');
        EXPECT_NEAR(std::stod(pair.substr(0, comma)), v[c].real(), 1e-15);
        EXPECT_NEAR(std::stod(pair.substr(comma + 1)), v[c].imag(), 1e-15);
        ++c;
    }
    EXPECT_EQ(c, 8u);
    // Origin: the l = 1 upper block vanishes.
    std::istringstream origin(got[1]);
    for (int k = 0; k < 4 && origin >> pair; ++k) {
        const auto comma = pair.find(',');
        EXPECT_EQ(std::stod(pair.substr(0, comma)), 0.0) << k;
        EXPECT_EQ(std::stod(pair.substr(comma + 1)), 0.0) << k;
    }
}

TEST_F(Cli, EmptyPointsFile) {
    const auto pts = dir / "empty.txt";
    std::ofstream(pts).flush();
    const auto r = run("eval " + pts.string());
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
}
