// Copyright 2026 The mzpovm Authors
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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mzpovm/cli.hpp"
#include "mzpovm/report.hpp"

using namespace mzpovm;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "mzpovm");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

std::size_t column(const std::vector<std::string> &header, const std::string &name) {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw std::runtime_error("no column " + name);
}

int count_lines(const std::string &s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

const std::string kHalfPi = "-1.5707963267948966";

}  // namespace

TEST(CliRun, ErasureConditionalProbabilities) {
    const auto r = cli({"run", "--experiment", "erasure", "--delta", kHalfPi, "--gamma", "0", "--input",
                        "0.7071067811865476,0,0.7071067811865476,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_NEAR(j["conditional_probabilities"]["1"]["D1"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(j["conditional_probabilities"]["1"]["D2"].get<double>(), 0.0, 1e-12);
    EXPECT_NEAR(j["conditional_probabilities"]["2"]["D2"].get<double>(), 1.0, 1e-12);
    EXPECT_EQ(j["marginals"]["coincidence"]["classification"], "sharp");
    EXPECT_EQ(j["marginals"]["detector"]["classification"], "trivial");
}

TEST(CliRun, PathProbabilities) {
    const auto r = cli({"run", "--experiment", "path", "--input", "1,0,0,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_NEAR(j["probabilities"]["1"].get<double>(), 1.0, 1e-15);
    EXPECT_NEAR(j["probabilities"]["2"].get<double>(), 0.0, 1e-15);
    EXPECT_TRUE(j["conditional_probabilities"].is_null());
}

TEST(CliRun, QuantitativeWorkedPoint) {
    const auto r = cli({"run", "--experiment", "quantitative", "--delta", kHalfPi, "--theta", "1.0471975511965976"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_NEAR(j["path_marking"]["D"].get<double>(), 0.5, 1e-12);
    EXPECT_NEAR(j["path_marking"]["V_e"].get<double>(), std::sqrt(3.0) / 2, 1e-12);
    bool found = false;
    for (const auto &rel : j["relations"]) {
        EXPECT_TRUE(rel["satisfied"].get<bool>()) << rel["name"];
        if (rel["name"] == "visibility_distinguishability") {
            found = true;
            EXPECT_LE(rel["slack"].get<double>(), 1e-9);
        }
    }
    EXPECT_TRUE(found);
}

TEST(CliRun, EffectsSerializedAsComplexPairs) {
    const auto r = cli({"run", "--experiment", "marking", "--delta", "0.3"});
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    const auto &effects = j["povm"]["effects"];
    ASSERT_EQ(effects.size(), 4u);
    for (const auto &[label, m] : effects.items()) {
        ASSERT_EQ(m.size(), 2u);
        for (const auto &row : m) {
            ASSERT_EQ(row.size(), 2u);
            for (const auto &entry : row) ASSERT_EQ(entry.size(), 2u);
        }
    }
    EXPECT_NEAR(j["povm"]["effects"]["11"][0][0][0].get<double>(), std::pow(std::cos(0.15), 2), 1e-12);
}

TEST(CliRun, JsonRoundTripIsByteIdentical) {
    for (const char *e : {"path", "interference", "marking", "erasure", "quantitative"}) {
        const auto r = cli({"run", "--experiment", e, "--delta", "0.37", "--gamma", "1.1", "--theta", "0.8", "--input",
                            "0.3,0.1,-0.5,0.2"});
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(canonical_dump(json::parse(r.out)), r.out) << e;
    }
}

TEST(CliRun, InterferenceDefaultsToQuarterTurn) {
    const auto r = cli({"run", "--experiment", "interference"});
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_NEAR(j["config"]["delta"].get<double>(), -std::numbers::pi / 2, 1e-15);
    EXPECT_NEAR(j["probabilities"]["1"].get<double>(), 1.0, 1e-12);
}

TEST(CliRun, DegreesFlag) {
    const auto a = cli({"run", "--experiment", "quantitative", "--delta", "-90", "--theta", "60", "--degrees"});
    const auto b = cli({"run", "--experiment", "quantitative", "--delta", kHalfPi, "--theta", "1.0471975511965976"});
    ASSERT_EQ(a.code, 0);
    EXPECT_NEAR(json::parse(a.out)["path_marking"]["D"].get<double>(),
                json::parse(b.out)["path_marking"]["D"].get<double>(), 1e-12);
}

TEST(CliRun, ConfigFileWithOverrides) {
    const std::string path = ::testing::TempDir() + "mzpovm_cfg.json";
    {
        std::ofstream f(path);
        f << R"({"experiment": "quantitative", "delta": -1.5707963267948966, "theta": 0.0, "input": [1, 0, 0, 0]})";
    }
    const auto a = cli({"run", "--config", path});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(json::parse(a.out)["config"]["experiment"], "quantitative");
    EXPECT_NEAR(json::parse(a.out)["input"]["alpha"][0].get<double>(), 1.0, 1e-15);

    const auto b = cli({"run", "--config", path, "--theta", "1.0471975511965976", "--input", "1,0,1,0"});
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_NEAR(json::parse(b.out)["path_marking"]["D"].get<double>(), 0.5, 1e-12);

    {
        std::ofstream f(path);
        f << R"({"experiment": "quantitative", "colour": 3})";
    }
    EXPECT_EQ(cli({"run", "--config", path}).code, 2);
    std::remove(path.c_str());
    EXPECT_EQ(cli({"run", "--config", path}).code, 2);
}

TEST(CliRun, InputRenormalization) {
    const auto quiet = cli({"run", "--input", "0.7071068,0,0.7071068,0"});
    EXPECT_EQ(quiet.code, 0);
    EXPECT_TRUE(quiet.err.empty()) << quiet.err;

    const auto loud = cli({"run", "--input", "1,0,1,0"});
    EXPECT_EQ(loud.code, 0);
    EXPECT_NE(loud.err.find("warning"), std::string::npos);
    EXPECT_NEAR(json::parse(loud.out)["input"]["alpha"][0].get<double>(), 1.0 / std::numbers::sqrt2, 1e-15);
}

TEST(CliRun, UsageErrors) {
    for (const auto &args : std::vector<std::vector<std::string>>{
             {},
             {"run", "--experiment", "sagnac"},
             {"run", "--input", "0,0,0,0"},
             {"run", "--input", "1,0,0"},
             {"run", "--input", "1,0,x,0"},
             {"run", "--delta", "abc"},
             {"run", "--delta", "nan"},
             {"frobnicate"},
             {"run", "--unknown"},
         }) {
        const auto r = cli(args);
        EXPECT_EQ(r.code, 2) << (args.empty() ? "<none>" : args.back());
        EXPECT_EQ(count_lines(r.err), 1) << r.err;
        EXPECT_TRUE(r.out.empty());
    }
}

TEST(CliSweep, QuantitativeTheta) {
    const auto r = cli({"sweep", "--experiment", "quantitative", "--delta", kHalfPi, "--param", "theta", "--from", "0",
                        "--to", "1.5707963267948966", "--steps", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 8u);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), kSweepHeader);
    const auto f = column(rows[0], "F_contrast"), g = column(rows[0], "G_contrast");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        ASSERT_EQ(rows[i].size(), rows[0].size());
        const double th = std::stod(rows[i][0]);
        EXPECT_NEAR(std::stod(rows[i][f]), std::sin(th), 1e-12);
        EXPECT_NEAR(std::stod(rows[i][g]), std::cos(th), 1e-12);
    }
}

TEST(CliSweep, ErasureDelta) {
    const auto r =
        cli({"sweep", "--experiment", "erasure", "--param", "delta", "--from", "0", "--to", "1.5707963267948966", "--steps", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_csv(r.out);
    const auto f = column(rows[0], "F_contrast");
    for (std::size_t i = 1; i < rows.size(); ++i)
        EXPECT_NEAR(std::stod(rows[i][f]), std::abs(std::cos(std::stod(rows[i][0]))), 1e-12);
}

TEST(CliSweep, TwoStepsTwoRowsAndEmptyFields) {
    const auto r = cli({"sweep", "--experiment", "path", "--param", "delta", "--from", "0", "--to", "1", "--steps", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[1].size(), rows[0].size());
    EXPECT_TRUE(rows[1][column(rows[0], "G_contrast")].empty());
}

TEST(CliSweep, Errors) {
    EXPECT_EQ(cli({"sweep", "--param", "delta", "--from", "1", "--to", "0", "--steps", "3"}).code, 2);
    EXPECT_EQ(cli({"sweep", "--param", "delta", "--from", "0", "--to", "1", "--steps", "1"}).code, 2);
    EXPECT_EQ(cli({"sweep", "--param", "delta", "--from", "0", "--to", "1", "--steps", "100001"}).code, 2);
    EXPECT_EQ(cli({"sweep", "--param", "phi", "--from", "0", "--to", "1", "--steps", "3"}).code, 2);
    EXPECT_EQ(cli({"sweep", "--param", "delta", "--from", "0", "--to", "1"}).code, 2);
}

TEST(CliVerify, DefaultPassesAndIsDeterministic) {
    const auto a = cli({"verify", "--seed", "42"});
    const auto b = cli({"verify", "--seed", "42"});
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("checks passed"), std::string::npos);
}

TEST(CliVerify, ImpossibleToleranceFails) {
    EXPECT_EQ(cli({"verify", "--tol", "1e-16"}).code, 1);
}

TEST(CliVerify, InjectedPerturbationFails) {
    EXPECT_EQ(cli({"verify", "--perturb", "1e-6"}).code, 1);
    EXPECT_EQ(cli({"verify", "--perturb", "-1e-6"}).code, 1);
}

TEST(CliVerify, ArgumentErrors) {
    EXPECT_EQ(cli({"verify", "--tol", "-1"}).code, 2);
    EXPECT_EQ(cli({"verify", "--samples", "0"}).code, 2);
    EXPECT_EQ(cli({"verify", "--seed", "abc"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
    const auto r = cli({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("run"), std::string::npos);
}
