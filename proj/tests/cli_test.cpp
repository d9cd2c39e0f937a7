// Copyright 2026 The duality_lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "dlab_cli/cli.hpp"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = dlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("dlab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string &name, const std::string &body) {
        const auto p = dir_ / name;
        std::ofstream(p) << body;
        return p;
    }

    fs::path dir_;
};

TEST_F(Cli, EvalNoiselessSaturates) {
    const auto r = run({"eval", "--channel", "dc", "--gamma", "0", "--p1", "0.5", "--theta", "0.3", "--phi", "0.1",
                        "--eta1", "1", "--eta2", "2", "--beta1", "0", "--beta2", "0", "--delta1", "0", "--delta2",
                        "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_NEAR(j["F_bound"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(j["F_exact"].get<double>(), 1.0, 1e-12);
}

TEST_F(Cli, EvalDepolarizingAnchor) {
    const auto r = run({"eval", "--channel", "dc", "--gamma", "0.2", "--p1", "0.5", "--eta1", "0", "--eta2", "1.68"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(json::parse(r.out)["F_exact"].get<double>(), 0.8004, 5e-4);
}

TEST_F(Cli, EvalCsvFormat) {
    const auto r = run({"--format", "csv", "eval", "--channel", "pdc", "--gamma", "0.1", "--p1", "0.3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("p1,theta,phi,channel", 0), 0u);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
}

TEST_F(Cli, InvalidParametersNameTheFlag) {
    auto r = run({"eval", "--gamma", "1.5", "--channel", "adc", "--p1", "0.5"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--gamma"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("[0, 1]"), std::string::npos) << r.err;

    r = run({"eval", "--gamma", "0.1", "--channel", "adc", "--p1", "0.5", "--theta", "4"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--theta"), std::string::npos) << r.err;

    r = run({"eval", "--gamma", "0.1", "--channel", "xyz", "--p1", "0.5"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--channel"), std::string::npos) << r.err;

    r = run({"eval", "--gamma", "0.1", "--channel", "dc"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--p1"), std::string::npos) << r.err;
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"sweep", "--channel", "dc", "--axis", "theta:0:1"}).code, 2);
    EXPECT_EQ(run({"sweep", "--channel", "dc", "--axis", "nope:0:1:3"}).code, 2);
    EXPECT_EQ(run({"sweep", "--channel", "dc", "--axis", "gamma:0:2:3"}).code, 2);
    EXPECT_EQ(run({"figure", "--id", "fig9z"}).code, 2);
    EXPECT_EQ(run({"verify", "--samples", "10"}).code, 2);
    EXPECT_EQ(run({"verify", "--cases", "DC_CASE9"}).code, 2);
    EXPECT_EQ(run({"find-controls", "--channel", "dc", "--gamma", "0.5", "--threshold", "1.5"}).code, 2);
    EXPECT_EQ(run({"find-controls", "--channel", "dc", "--gamma", "0.5", "--controls", "theta"}).code, 2);
    EXPECT_EQ(run({"find-controls", "--channel", "dc", "--gamma", "0.5", "--theta", "1"}).code, 2);
    EXPECT_EQ(run({"eval", "--channel", "dc", "--gamma", "0", "--p1", "0.5", "--config", "/nonexistent"}).code, 2);
}

TEST_F(Cli, HelpExitsCleanly) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("find-controls"), std::string::npos);
}

TEST_F(Cli, DegreesConvertAngleFlags) {
    const auto a = run({"eval", "--channel", "adc", "--gamma", "0.3", "--p1", "0.4", "--theta", "90", "--deta", "180",
                        "--degrees"});
    const auto b = run({"eval", "--channel", "adc", "--gamma", "0.3", "--p1", "0.4", "--theta", "1.5707963267948966",
                        "--deta", "3.1415926535897931"});
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_NEAR(json::parse(a.out)["F_exact"].get<double>(), json::parse(b.out)["F_exact"].get<double>(), 1e-14);
    EXPECT_NEAR(json::parse(a.out)["theta"].get<double>(), 1.5707963267948966, 1e-15);
}

TEST_F(Cli, DifferenceShorthandAndRawPrecedence) {
    auto j = json::parse(run({"eval", "--channel", "dc", "--gamma", "0.1", "--p1", "0.5", "--dbeta", "0.7"}).out);
    EXPECT_EQ(j["beta1"].get<double>(), 0.0);
    EXPECT_DOUBLE_EQ(j["beta2"].get<double>(), -0.7);

    j = json::parse(
        run({"eval", "--channel", "dc", "--gamma", "0.1", "--p1", "0.5", "--dbeta", "0.7", "--beta1", "1.0"}).out);
    EXPECT_DOUBLE_EQ(j["beta1"].get<double>(), 1.0);
    EXPECT_DOUBLE_EQ(j["beta2"].get<double>(), 0.3);

    j = json::parse(
        run({"eval", "--channel", "dc", "--gamma", "0.1", "--p1", "0.5", "--dbeta", "0.7", "--beta2", "2.0"}).out);
    EXPECT_DOUBLE_EQ(j["beta1"].get<double>(), 0.0);
    EXPECT_DOUBLE_EQ(j["beta2"].get<double>(), 2.0);
}

TEST_F(Cli, ConfigSuppliesValues) {
    const auto cfg = write("run.cfg", "# scenario\nchannel = adc\ngamma = 0.25\np1=0.5\n--theta = 1.0\ndegrees = false\n");
    const auto r = run({"--config", cfg.string(), "eval"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["channel"], "adc");
    EXPECT_EQ(j["gamma"].get<double>(), 0.25);
    EXPECT_EQ(j["theta"].get<double>(), 1.0);
}

TEST_F(Cli, ExplicitFlagsOverrideConfigPerFlag) {
    const std::map<std::string, std::pair<std::string, std::string>> values{
        {"p1", {"0.2", "0.7"}},     {"theta", {"0.5", "1.5"}},  {"phi", {"0.3", "2.0"}},
        {"gamma", {"0.1", "0.9"}},  {"eta1", {"0.2", "1.2"}},   {"eta2", {"0.4", "2.4"}},
        {"beta1", {"0.1", "1.1"}},  {"beta2", {"0.3", "1.3"}},  {"delta1", {"0.6", "1.6"}},
        {"delta2", {"0.8", "1.8"}}, {"alpha1", {"0.1", "0.2"}}, {"alpha2", {"0.3", "0.4"}},
    };
    std::string body = "channel = dc\n";
    for (const auto &[k, v] : values) body += k + " = " + v.first + "\n";
    const auto cfg = write("base.cfg", body);
    for (const auto &[k, v] : values) {
        const auto r = run({"eval", "--config", cfg.string(), "--" + k, v.second});
        ASSERT_EQ(r.code, 0) << k << ": " << r.err;
        const auto j = json::parse(r.out);
        if (j.contains(k)) EXPECT_EQ(j[k].get<double>(), std::stod(v.second)) << k;
        for (const auto &[other, ov] : values) {
            if (other != k && j.contains(other)) EXPECT_EQ(j[other].get<double>(), std::stod(ov.first)) << other;
        }
    }
    const auto r = run({"eval", "--config", cfg.string(), "--channel", "pdc"});
    EXPECT_EQ(json::parse(r.out)["channel"], "pdc");
}

TEST_F(Cli, ExplicitShorthandHidesConfigRawPair) {
    const auto cfg = write("pair.cfg", "channel = dc\ngamma = 0.1\np1 = 0.5\nbeta1 = 1.0\nbeta2 = 2.0\n");
    const auto j = json::parse(run({"eval", "--config", cfg.string(), "--dbeta", "0.5"}).out);
    EXPECT_EQ(j["beta1"].get<double>(), 0.0);
    EXPECT_DOUBLE_EQ(j["beta2"].get<double>(), -0.5);
}

TEST_F(Cli, ConfigRejectsMalformedLines) {
    const auto cfg = write("bad.cfg", "gamma 0.1\n");
    const auto r = run({"eval", "--config", cfg.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("bad.cfg:1"), std::string::npos) << r.err;
    EXPECT_EQ(run({"eval", "--config", write("unknown.cfg", "colour = red\n").string()}).code, 2);
}

TEST_F(Cli, FigureWritesDepolarizingGrid) {
    const auto out = dir_ / "fig3a.csv";
    const auto r = run({"figure", "--id", "fig3a", "--count", "11", "--out", out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("121 rows"), std::string::npos) << r.out;
    const std::string body = slurp(out);
    EXPECT_EQ(body.rfind("deta,gamma,F,F_bound\n", 0), 0u);
    EXPECT_EQ(std::count(body.begin(), body.end(), '\n'), 122);
}

TEST_F(Cli, IdenticalInvocationsAreByteIdentical) {
    const std::vector<std::vector<std::string>> cmds{
        {"sweep", "--channel", "adc", "--gamma", "0.3", "--axis", "theta:0:3.14159:9", "--axis", "dbeta:0:6:7"},
        {"figure", "--id", "fig2b", "--count", "33"},
        {"verify", "--samples", "200", "--seed", "5"},
        {"find-controls", "--channel", "pdc", "--gamma", "0.2", "--grid", "8", "--controls", "deta"},
    };
    int n = 0;
    for (const auto &cmd : cmds) {
        const auto a = dir_ / ("a" + std::to_string(n) + ".out");
        const auto b = dir_ / ("b" + std::to_string(n++) + ".out");
        auto ca = cmd, cb = cmd;
        ca.insert(ca.end(), {"--out", a.string()});
        cb.insert(cb.end(), {"--out", b.string()});
        const auto ra = run(ca), rb = run(cb);
        ASSERT_LE(ra.code, 1) << ra.err;
        EXPECT_EQ(ra.code, rb.code);
        EXPECT_EQ(ra.out, rb.out);
        EXPECT_EQ(slurp(a), slurp(b));
        EXPECT_FALSE(slurp(a).empty());
    }
}

TEST_F(Cli, SweepSummaryAndJson) {
    const auto r = run({"--format", "json", "sweep", "--channel", "dc", "--gamma", "0.2", "--axis", "deta:0:1:4",
                        "--outputs", "F_exact"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    ASSERT_EQ(j.size(), 4u);
    EXPECT_TRUE(j[0].contains("F_exact"));
    EXPECT_FALSE(j[0].contains("F_bound"));
    EXPECT_NE(r.err.find("sweep: 4 rows"), std::string::npos);
}

TEST_F(Cli, VerifyExitCodeReflectsFailures) {
    auto r = run({"verify", "--samples", "200", "--cases", "DC_CASE1,PDC_CASE2B"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["cases_failed"], 0);
    r = run({"verify", "--samples", "200", "--cases", "ADC_GENERAL"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("failing: ADC_GENERAL"), std::string::npos) << r.err;
    r = run({"verify", "--samples", "200", "--gamma-zero", "--cases", "ADC_GENERAL,PDC_GENERAL"});
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(Cli, FindControlsReportsAssignment) {
    const auto r = run({"find-controls", "--channel", "dc", "--gamma", "0.5", "--threshold", "0.9", "--grid", "16"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_TRUE(j["met"].get<bool>());
    EXPECT_GE(j["min_f"].get<double>(), 0.9);
    EXPECT_EQ(j["assignment"].size(), 3u);
    EXPECT_NE(r.err.find(" met"), std::string::npos);
}

TEST_F(Cli, FindControlsEvaluatesTableRow) {
    const auto r = run({"find-controls", "--channel", "dc", "--gamma", "0.5", "--controls", "deta,dbeta", "--ddelta",
                        "0", "--evaluate", "deta=0.5,dbeta=0.2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(json::parse(r.out)["min_f"].get<double>(), 0.947, 5e-4);
}

TEST_F(Cli, TableOneAuditFlagsDiscrepancies) {
    const auto r = run({"find-controls", "--table1", "--grid", "32"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_TRUE(j[0]["agrees"].get<bool>());
    EXPECT_FALSE(j[1]["agrees"].get<bool>());
    EXPECT_FALSE(j[2]["agrees"].get<bool>());
    EXPECT_NE(r.err.find("DISCREPANCY"), std::string::npos);
}

TEST_F(Cli, ThreadCapDoesNotChangeOutput) {
    const std::vector<std::string> cmd{"sweep", "--channel", "pdc", "--axis", "theta:0:3:6", "--axis", "gamma:0:1:5"};
    setenv("DUALITY_LAB_THREADS", "1", 1);
    const auto a = run(cmd);
    setenv("DUALITY_LAB_THREADS", "3", 1);
    const auto b = run(cmd);
    unsetenv("DUALITY_LAB_THREADS");
    EXPECT_EQ(a.out, b.out);
}

}  // namespace
