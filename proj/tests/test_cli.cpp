#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "volconv.hpp"

// Runs the volconv executable end to end and checks outputs and exit codes.

using namespace volconv;
namespace fs = std::filesystem;

namespace {

// One directory per test, since ctest runs the tests in parallel.
fs::path work() {
    fs::path d = fs::path(VOLCONV_WORK) / ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::create_directories(d);
    return d;
}

std::string path(const std::string& name) { return (work() / name).string(); }

/// Exit status of `volconv <args>`; stderr is captured into err.txt.
int run(const std::string& args) {
    const std::string cmd = std::string("\"") + VOLCONV_CLI + "\" " + args + " > " + path("stdout.txt") + " 2> " + path("err.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double stderr_value(const std::string& key) {
    const auto text = slurp(path("err.txt"));
    const auto pos = text.find(key + "=");
    if (pos == std::string::npos) return NAN;
    return std::stod(text.substr(pos + key.size() + 1));
}

}  // namespace

TEST(Cli, VerifyChebyshevReportsMachinePrecision) {
    ASSERT_EQ(run("verify --basis chebyshev -M 10 -N 50 --seed 1 --out " + path("verify.csv")), 0);
    EXPECT_LE(stderr_value("max_abs"), 1e-14);
    const auto csv = slurp(path("verify.csv"));
    EXPECT_NE(csv.find("# seed=1"), std::string::npos);
    EXPECT_NE(csv.find("max_abs,"), std::string::npos);
}

TEST(Cli, VerifyIsDeterministic) {
    ASSERT_EQ(run("verify --basis jacobi --alpha 2 --beta 1.5 -M 6 -N 20 --seed 7 --out " + path("v1.csv")), 0);
    ASSERT_EQ(run("verify --basis jacobi --alpha 2 --beta 1.5 -M 6 -N 20 --seed 7 --out " + path("v2.csv")), 0);
    EXPECT_EQ(slurp(path("v1.csv")), slurp(path("v2.csv")));
}

TEST(Cli, SolveRenewalResidual) {
    const auto f = fit_chebyshev(named::renewal_f, {0.0, 2.0});
    save_series(path("renewal_f.json"), f);
    ASSERT_EQ(run("solve --kernel " + path("renewal_f.json") + " --rhs " + path("renewal_f.json") + " -N 17 --out " +
                  path("u.json")),
              0);
    EXPECT_LE(stderr_value("residual"), 1e-13);
    const auto u = load_series(path("u.json"));
    EXPECT_EQ(u.degree(), 17u);
    for (double x = 0.0; x <= 2.0; x += 0.01) EXPECT_NEAR(u(x), named::renewal_u(x), 1e-13);
}

TEST(Cli, BuildAnalyticMatrix) {
    save_series(path("one.json"), PolySeries(BasisSpec::chebyshev(), {1.0}));
    ASSERT_EQ(run("build --basis chebyshev --in " + path("one.json") + " -N 2 --out " + path("R.csv")), 0);
    std::ifstream in(path("R.csv"));
    const auto R = read_matrix_csv(in);
    ASSERT_EQ(R.rows(), 4);
    ASSERT_EQ(R.cols(), 3);
    Eigen::MatrixXd expect(4, 3);
    expect << 1.0, -0.25, -1.0 / 3.0,
              1.0, 0.0, -0.5,
              0.0, 0.25, 0.0,
              0.0, 0.0, 1.0 / 6.0;
    EXPECT_LE((R - expect).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Cli, FitJsonRoundTrip) {
    ASSERT_EQ(run("fit --f renewal_u --domain 0 2 --out " + path("fit.json")), 0);
    const auto loaded = load_series(path("fit.json"));
    const auto direct = fit_chebyshev(named::renewal_u, {0.0, 2.0});
    ASSERT_EQ(loaded.degree(), direct.degree());
    for (double x = 0.0; x <= 2.0; x += 0.002) EXPECT_NEAR(loaded(x), direct(x), 1e-15);
}

TEST(Cli, FitCsvRoundTrip) {
    ASSERT_EQ(run("fit --f laguerre_g --basis laguerre -N 30 --format csv --out " + path("g.csv")), 0);
    const auto loaded = load_series(path("g.csv"));
    const auto direct = fit_laguerre(named::laguerre_g, 30);
    for (std::size_t i = 0; i <= 30; ++i) EXPECT_EQ(loaded.coeffs()[i], direct.coeffs()[i]);
}

TEST(Cli, ConvolveWritesSeries) {
    save_series(path("one.json"), PolySeries(BasisSpec::chebyshev(), {1.0}));
    ASSERT_EQ(run("convolve --f " + path("one.json") + " --g " + path("one.json") + " --out " + path("h.json")), 0);
    const auto h = load_series(path("h.json"));
    // (1 * 1)(x) = x + 1 on [-2, 0] with the source interval shifted by c = -1.
    for (double x = -2.0; x <= 0.0; x += 0.25) EXPECT_NEAR(h(x), x + 2.0, 1e-15);
}

TEST(Cli, InstabilityWritesBothReports) {
    ASSERT_EQ(run("instability -M 10 -N 50 --seed 1 --out " + path("inst.csv")), 0);
    const auto csv = slurp(path("inst.csv"));
    EXPECT_NE(csv.find("# report=naive"), std::string::npos);
    EXPECT_NE(csv.find("# report=stable"), std::string::npos);
}

TEST(Cli, InvalidArgumentsExitTwo) {
    EXPECT_EQ(run("verify --basis chebyshev -N 50"), 2);
    EXPECT_EQ(run("verify --basis hermite -M 3 -N 5"), 2);
    EXPECT_EQ(run("verify --basis gegenbauer --lambda -2 -M 3 -N 5"), 2);
    EXPECT_EQ(run("nonsense"), 2);
    EXPECT_EQ(run("fit --f no_such_function"), 2);
}

TEST(Cli, IoFailureExitsThree) {
    EXPECT_EQ(run("convolve --f " + path("missing.json") + " --g " + path("missing.json")), 3);
    std::ofstream(path("bad.json")) << "{ not json";
    EXPECT_EQ(run("build --in " + path("bad.json") + " -N 3"), 3);
    save_series(path("one.json"), PolySeries(BasisSpec::chebyshev(), {1.0}));
    EXPECT_EQ(run("build --in " + path("one.json") + " -N 3 --out " + path("no_dir/R.csv")), 3);
}

TEST(Cli, SingularSystemExitsFour) {
    // For f = 1 on [-1, 1], R_{0,0} = 1, so I - R is singular at N = 0.
    save_series(path("one.json"), PolySeries(BasisSpec::chebyshev(), {1.0}));
    EXPECT_EQ(run("solve --kernel " + path("one.json") + " --rhs " + path("one.json") + " -N 0"), 4);
    EXPECT_FALSE(slurp(path("err.txt")).empty());
}
