#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lognet/cli.hpp"
#include "lognet/errors.hpp"
#include "lognet/poincare_disk.hpp"
#include "lognet/serialize.hpp"
#include "oracles.hpp"

using nlohmann::json;
namespace fz = oracle::frozen;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = lognet::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace

TEST(Cli, BuildLayerPaperMode) {
    const CliResult r = run({"build-layer", "--mu", "1", "--sigma", "1", "--mode", "paper"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json doc = json::parse(r.out);
    EXPECT_NEAR(doc["beta"].get<double>(), fz::beta_11, 1e-15);
    EXPECT_EQ(doc["theta"]["theta1"].get<double>(), 1.0);
    EXPECT_EQ(doc["theta"]["theta2"].get<double>(), -0.5);
    EXPECT_EQ(doc["P"].get<double>(), -1.0);
    EXPECT_EQ(doc["Q"].get<double>(), 2.0);
    EXPECT_EQ(doc["mode"], "paper");
    ASSERT_EQ(doc["W"]["rows"], 3);
    ASSERT_EQ(doc["W"]["cols"], 3);
    const auto w = doc["W"]["data"].get<std::vector<double>>();
    ASSERT_EQ(w.size(), 9u);
    EXPECT_EQ(w[6], 0.0);
    EXPECT_EQ(w[7], 0.0);
    EXPECT_EQ(w[8], 1.0);
    EXPECT_NEAR(w[2], fz::t_paper_1, 1e-15);
    EXPECT_EQ(doc["Omega"]["data"].size(), 4u);
    EXPECT_EQ(doc["network"]["edges"].size(), 9u);
    for (const char* key : {"theta", "P", "Q", "beta", "z", "Omega", "t", "Z", "Zprime", "W", "mode"}) {
        EXPECT_TRUE(doc.contains(key)) << key;
    }
}

TEST(Cli, BuildLayerExpMode) {
    const CliResult r = run({"build-layer", "--mu", "1", "--sigma", "1", "--mode", "exp"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json doc = json::parse(r.out);
    EXPECT_NEAR(doc["Zprime"][0].get<double>(), fz::act_exp_re, 1e-15);
    EXPECT_NEAR(doc["Zprime"][1].get<double>(), fz::act_exp_im, 1e-15);
}

TEST(Cli, BuildLayerThetaOverride) {
    const CliResult a = run({"build-layer", "--theta1", "1", "--theta2", "-0.5"});
    const CliResult b = run({"build-layer", "--mu", "1", "--sigma", "1"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run({"build-layer", "--theta1", "1"}).code, 2);
}

TEST(Cli, DomainErrorsExitTwo) {
    const CliResult mu0 = run({"build-layer", "--mu", "0", "--sigma", "1"});
    EXPECT_EQ(mu0.code, 2);
    EXPECT_NE(mu0.err.find("chart singularity"), std::string::npos);
    EXPECT_TRUE(mu0.out.empty());
    EXPECT_EQ(run({"build-layer", "--mu", "1", "--sigma", "0"}).code, 2);
    EXPECT_EQ(run({"build-layer", "--mu", "1", "--sigma", "-1"}).code, 2);
    EXPECT_EQ(run({"build-layer", "--mu", "1"}).code, 2);
    EXPECT_EQ(run({"build-layer", "--mu", "1", "--sigma", "1", "--mode", "tanh"}).code, 2);
    EXPECT_EQ(run({"build-layer", "--mu", "1", "--sigma", "1", "--format", "csv"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, FlowCsv) {
    const CliResult r = run({"flow", "--mu", "1", "--sigma", "1", "--step", "0.001", "--t-end", "1", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = split_lines(r.out);
    ASSERT_EQ(lines.size(), 1002u);
    EXPECT_EQ(lines[0], "t,theta1,theta2,P,Q,H");
    EXPECT_EQ(lines[1], "0,1,-0.5,-1,2,2");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto comma = lines[i].rfind(',');
        const double h = std::stod(lines[i].substr(comma + 1));
        EXPECT_LT(std::abs(h - 2.0), 1e-8);
    }
}

TEST(Cli, FlowZeroHorizon) {
    const CliResult r = run({"flow", "--mu", "1", "--sigma", "1", "--t-end", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "t,theta1,theta2,P,Q,H\n0,1,-0.5,-1,2,2\n");
}

TEST(Cli, FlowJson) {
    const CliResult r = run({"flow", "--mu", "1", "--sigma", "1", "--step", "0.01", "--t-end", "0.1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json doc = json::parse(r.out);
    EXPECT_EQ(doc["samples"].size(), 11u);
    EXPECT_FALSE(doc["terminated_early"].get<bool>());
    EXPECT_EQ(doc["samples"][0]["H"].get<double>(), 2.0);
}

TEST(Cli, FlowTerminationIsReported) {
    const CliResult csv = run({"flow", "--theta1", "1", "--theta2", "-0.01", "--step", "0.1", "--t-end", "1"});
    ASSERT_EQ(csv.code, 0) << csv.err;
    const auto lines = split_lines(csv.out);
    EXPECT_EQ(lines.back().rfind("# terminated: ", 0), 0u);
    const CliResult js = run({"flow", "--theta1", "1", "--theta2", "-0.01", "--step", "0.1", "--format", "json"});
    const json doc = json::parse(js.out);
    EXPECT_TRUE(doc["terminated_early"].get<bool>());
    EXPECT_TRUE(doc.contains("terminated"));
}

TEST(Cli, FlowArgumentErrors) {
    EXPECT_EQ(run({"flow", "--mu", "1", "--sigma", "1", "--step", "-1"}).code, 2);
    EXPECT_EQ(run({"flow", "--mu", "1", "--sigma", "1", "--step", "0"}).code, 2);
    EXPECT_EQ(run({"flow", "--mu", "1", "--sigma", "1", "--t-end", "-1"}).code, 2);
    EXPECT_EQ(run({"flow", "--mu", "0", "--sigma", "1"}).code, 2);
}

TEST(Cli, MobiusGenerators) {
    const CliResult g1 = run({"mobius", "--mu", "1", "--sigma", "1", "--generator", "g1"});
    ASSERT_EQ(g1.code, 0) << g1.err;
    const json d1 = json::parse(g1.out);
    EXPECT_NEAR(d1["gz_modulus"].get<double>(), fz::g1z_mod, 1e-15);
    EXPECT_NEAR(d1["gz"]["re"].get<double>(), fz::g1z_re, 1e-15);
    EXPECT_NEAR(d1["g"]["alpha"]["re"].get<double>(), fz::g1_alpha, 1e-15);

    const CliResult g2 = run({"mobius", "--mu", "1", "--sigma", "1", "--generator", "g2"});
    ASSERT_EQ(g2.code, 0);
    const json d2 = json::parse(g2.out);
    EXPECT_LT(d2["gz_modulus"].get<double>(), 1.0);
    EXPECT_TRUE(std::isfinite(d2["gz"]["im"].get<double>()));

    // g1inv output pushed back through g1 returns the embedded point.
    const CliResult inv = run({"mobius", "--mu", "1", "--sigma", "1", "--generator", "g1inv"});
    const json di = json::parse(inv.out);
    const lognet::DiskPoint w(lognet::Complex(di["gz"]["re"].get<double>(), di["gz"]["im"].get<double>()));
    const lognet::DiskPoint back = lognet::mobius(lognet::generator(lognet::Generator::g1, di["beta"].get<double>()), w);
    EXPECT_LT(std::abs(back.value() - lognet::Complex(di["z"]["re"].get<double>(), di["z"]["im"].get<double>())), 1e-12);

    EXPECT_EQ(run({"mobius", "--mu", "1", "--sigma", "1"}).code, 2);
    EXPECT_EQ(run({"mobius", "--mu", "1", "--sigma", "1", "--generator", "g3"}).code, 2);
    EXPECT_EQ(run({"mobius", "--mu", "0", "--sigma", "1", "--generator", "g1"}).code, 2);
}

TEST(Cli, VerifyPassesAndIsDeterministic) {
    const CliResult a = run({"verify"});
    const CliResult b = run({"verify"});
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyWithImpossibleToleranceFails) {
    const CliResult r = run({"verify", "--tol", "1e-16"});
    EXPECT_EQ(r.code, 1);
    bool fisher_failed = false;
    for (const auto& line : split_lines(r.out)) {
        if (line.find("fisher_finite_difference") != std::string::npos) {
            fisher_failed = line.rfind("FAIL", 0) == 0;
        }
    }
    EXPECT_TRUE(fisher_failed) << r.out;
    EXPECT_EQ(run({"verify", "--tol", "0"}).code, 2);
    EXPECT_EQ(run({"verify", "--tol", "-1"}).code, 2);
}

TEST(Cli, VerifyJsonReport) {
    const CliResult r = run({"verify", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const json doc = json::parse(r.out);
    EXPECT_TRUE(doc["all_passed"].get<bool>());
    EXPECT_GE(doc["checks"].size(), 10u);
}

TEST(Cli, OutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "lognet_cli_test_output.json";
    const CliResult r = run({"build-layer", "--mu", "1", "--sigma", "1", "--output", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), run({"build-layer", "--mu", "1", "--sigma", "1"}).out);
    std::filesystem::remove(path);
    EXPECT_EQ(run({"build-layer", "--mu", "1", "--sigma", "1", "--output", "/nonexistent-dir/x.json"}).code, 2);
}

TEST(Serialize, DoublesRoundTrip) {
    for (double v : {0.1, -0.4472135954999579, 1.0 / 3.0, 2.0344439357957027, 1e-300, 6.02214076e23}) {
        EXPECT_EQ(std::stod(lognet::format_double(v)), v);
        const json doc = json::parse(json(v).dump());
        EXPECT_EQ(doc.get<double>(), v);
    }
    EXPECT_EQ(lognet::format_double(0.5), "0.5");
    EXPECT_EQ(lognet::format_double(-1.0), "-1");
}

TEST(Serialize, NonFiniteIsRejected) {
    EXPECT_THROW(lognet::require_finite(json{{"a", {1.0, std::nan("")}}}), lognet::DomainError);
    EXPECT_THROW(lognet::require_finite(json(INFINITY)), lognet::DomainError);
    EXPECT_NO_THROW(lognet::require_finite(json{{"a", 1.0}, {"b", "text"}}));
}

TEST(Serialize, MatrixLayoutIsRowMajor) {
    Eigen::Matrix2d m;
    m << 1.0, 2.0, 3.0, 4.0;
    const json doc = lognet::matrix_json(m);
    EXPECT_EQ(doc["rows"], 2);
    EXPECT_EQ(doc["cols"], 2);
    EXPECT_EQ(doc["data"], json::array({1.0, 2.0, 3.0, 4.0}));
}
