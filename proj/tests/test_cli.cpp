// Copyright 2026 The falqon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "falqon/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "falqon/config.hpp"
#include "falqon/error.hpp"
#include "falqon/io.hpp"
#include "json.hpp"
#include "test_util.hpp"

namespace falqon {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() /
               (std::string("falqon_cli_") + info->test_suite_name() + "_" + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    int cli(std::vector<std::string> args) {
        out_.str({});
        err_.str({});
        return cli::main(args, out_, err_);
    }

    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    static std::string reference() {
        return std::string(FALQON_DATA_DIR) + "/reference_n8_d3_seed42.edges";
    }

    fs::path dir_;
    std::ostringstream out_;
    std::ostringstream err_;
};

io::CsvTable read_csv(const std::string &p) {
    std::ifstream in(p);
    return io::parse_csv(in);
}

std::vector<std::string> col(const io::CsvTable &t, std::string_view name) {
    const auto idx = t.column(name);
    std::vector<std::string> values;
    for (const auto &row : t.rows) {
        values.push_back(row[idx]);
    }
    return values;
}

json read_json(const std::string &p) { return json::parse(io::read_file(p)); }

TEST_F(CliTest, GraphCommandReproducesReferenceFile) {
    ASSERT_EQ(cli({"graph", "--regular", "8", "3", "--seed", "42"}), 0) << err_.str();
    EXPECT_EQ(out_.str(), io::read_file(reference()));
    EXPECT_NE(err_.str().find("degree check passed"), std::string::npos);
    EXPECT_NE(err_.str().find("maxcut 10"), std::string::npos);

    ASSERT_EQ(cli({"graph", "--regular", "8", "3", "--out", path("g.edges")}), 0);
    EXPECT_EQ(io::read_file(path("g.edges")), io::read_file(reference()));
}

TEST_F(CliTest, UsageErrorsExitTwo) {
    EXPECT_EQ(cli({"graph", "--regular", "5", "3"}), 2);
    EXPECT_NE(err_.str().find("parity"), std::string::npos);
    EXPECT_EQ(cli({}), 2);
    EXPECT_EQ(cli({"frobnicate"}), 2);
    EXPECT_EQ(cli({"run", "--graph", reference(), "--depth", "0", "--out", path("o")}), 2);
    EXPECT_EQ(cli({"run", "--graph", reference(), "--noise", "independent", "--epsilon-bar",
                   "1.5", "--out", path("o")}),
              2);
    EXPECT_EQ(cli({"run", "--graph", path("missing.edges"), "--out", path("o")}), 2);
    EXPECT_FALSE(fs::exists(path("o/trace.csv")));
}

TEST_F(CliTest, RunWritesTraceAndSummary) {
    const auto out = path("run");
    ASSERT_EQ(cli({"run", "--graph", reference(), "--depth", "200", "--out", out, "--svg"}), 0)
        << err_.str();
    const auto trace = read_csv(out + "/trace.csv");
    EXPECT_EQ(trace.header,
              (std::vector<std::string>{"layer", "beta", "a", "cost", "cost_error"}));
    ASSERT_EQ(trace.rows.size(), 200U);
    EXPECT_EQ(trace.rows[0][0], "1");
    EXPECT_EQ(io::parse_real(trace.rows[0][1]), 0.0);

    const auto summary = read_json(out + "/summary.json");
    EXPECT_EQ(summary["n_qubits"], 8);
    EXPECT_EQ(summary["n_edges"], 12);
    EXPECT_EQ(summary["ground_energy"].get<double>(), -10.0);
    EXPECT_EQ(summary["layer_applications"], 200);
    EXPECT_EQ(summary["config"]["depth"], 200);
    EXPECT_TRUE(fs::exists(out + "/trace.svg"));

    // The CSV values reproduce the library run to the last bit.
    const auto lib = run(RunConfig{testing::reference_graph(), 0.05, 200, {}, {}});
    for (std::size_t t = 0; t < 200; ++t) {
        EXPECT_EQ(io::parse_real(trace.rows[t][1]), lib.layers[t].beta);
        EXPECT_EQ(io::parse_real(trace.rows[t][3]), lib.layers[t].cost);
    }
    EXPECT_EQ(summary["final_cost"].get<double>(), lib.layers.back().cost);
}

TEST_F(CliTest, RerunsAreByteIdentical) {
    for (const char *noise : {"systematic", "independent"}) {
        const std::vector<std::string> base{"run",         "--graph",         reference(),
                                            "--depth",     "20",              "--noise",
                                            noise,         "--epsilon-bar",   "0.3",
                                            "--seed",      "9"};
        auto a = base;
        a.insert(a.end(), {"--out", path("a")});
        auto b = base;
        b.insert(b.end(), {"--out", path("b")});
        ASSERT_EQ(cli(a), 0) << err_.str();
        ASSERT_EQ(cli(b), 0) << err_.str();
        EXPECT_EQ(io::read_file(path("a/trace.csv")), io::read_file(path("b/trace.csv")));
        EXPECT_EQ(io::read_file(path("a/summary.json")), io::read_file(path("b/summary.json")));
    }
}

TEST_F(CliTest, SingleSeedSweepMatchesRun) {
    ASSERT_EQ(cli({"run", "--graph", reference(), "--depth", "30", "--noise", "independent",
                   "--epsilon-bar", "0.25", "--seed", "4", "--lambda", "1.0", "--out",
                   path("run")}),
              0)
        << err_.str();
    ASSERT_EQ(cli({"sweep", "--graph", reference(), "--depth", "30", "--noise", "independent",
                   "--epsilon-bars", "0.25", "--lambdas", "1.0", "--seeds", "4", "--out",
                   path("sweep")}),
              0)
        << err_.str();
    const auto summary = read_json(path("run/summary.json"));
    const auto agg = read_csv(path("sweep/aggregate.csv"));
    ASSERT_EQ(agg.rows.size(), 1U);
    EXPECT_EQ(io::parse_real(col(agg, "mean_final_cost_error")[0]),
              summary["cost_error"].get<double>());
    EXPECT_EQ(col(agg, "std_final_cost_error")[0], "");
    EXPECT_EQ(col(agg, "n_seeds")[0], "1");
}

TEST_F(CliTest, SweepGridLayoutAndParallelDeterminism) {
    const std::vector<std::string> base{"sweep",         "--graph",    reference(), "--depth",
                                        "10",            "--noise",    "independent",
                                        "--epsilon-bars", "0.1,0.25",  "--lambdas",  "0.5,1.0",
                                        "--num-seeds",   "3"};
    auto serial = base;
    serial.insert(serial.end(), {"--out", path("s")});
    auto parallel = base;
    parallel.insert(parallel.end(), {"--out", path("p"), "--jobs", "3"});
    ASSERT_EQ(cli(serial), 0) << err_.str();
    ASSERT_EQ(cli(parallel), 0) << err_.str();
    const auto agg = read_csv(path("s/aggregate.csv"));
    ASSERT_EQ(agg.rows.size(), 4U);
    EXPECT_EQ(col(agg, "epsilon_bar"),
              (std::vector<std::string>{"0.10000000000000001", "0.10000000000000001", "0.25",
                                        "0.25"}));
    EXPECT_EQ(col(agg, "lambda"), (std::vector<std::string>{"0.5", "1", "0.5", "1"}));
    EXPECT_EQ(io::read_file(path("s/aggregate.csv")), io::read_file(path("p/aggregate.csv")));
    for (int cell = 0; cell < 4; ++cell) {
        char name[64];
        std::snprintf(name, sizeof name, "cells/cell_%03d_seeds.csv", cell);
        EXPECT_EQ(io::read_file(path("s/") + name), io::read_file(path("p/") + name));
        EXPECT_EQ(read_csv(path("s/") + name).rows.size(), 3U);
        std::snprintf(name, sizeof name, "cells/cell_%03d_layers.csv", cell);
        EXPECT_EQ(read_csv(path("s/") + name).rows.size(), 10U);
    }
}

TEST_F(CliTest, BoundRowsDominateBound) {
    ASSERT_EQ(cli({"run", "--graph", reference(), "--depth", "50", "--out", path("run")}), 0);
    ASSERT_EQ(cli({"bound", "--graph", reference(), "--trace", path("run/trace.csv"),
                   "--epsilon-bars", "0.01,0.05,0.1,0.9", "--draws", "20", "--out",
                   path("bound")}),
              0)
        << err_.str();
    const auto table = read_csv(path("bound/bound.csv"));
    ASSERT_EQ(table.rows.size(), 4U);
    for (std::size_t i = 0; i < 4; ++i) {
        const double empirical = io::parse_real(col(table, "empirical_min_fidelity")[i]);
        const double bound = io::parse_real(col(table, "fidelity_lower_bound")[i]);
        EXPECT_GE(empirical, bound);
        EXPECT_EQ(col(table, "draws")[i], "20");
    }
    EXPECT_EQ(col(table, "vacuous")[3], "true");
    EXPECT_EQ(col(table, "vacuous")[0], "false");
}

TEST_F(CliTest, JsonConfigWithFlagOverride) {
    fs::copy_file(reference(), path("ref.edges"));
    std::ofstream(path("c.json")) << R"({"graph": {"type": "file", "path": "ref.edges"},
        "depth": 40, "lambda": 1.0, "out": "from_config"})";
    ASSERT_EQ(cli({"run", "--config", path("c.json"), "--depth", "12", "--out", path("o")}), 0)
        << err_.str();
    EXPECT_EQ(read_csv(path("o/trace.csv")).rows.size(), 12U);
    const auto summary = read_json(path("o/summary.json"));
    EXPECT_EQ(summary["config"]["lambda"].get<double>(), 1.0);
    EXPECT_EQ(summary["config"]["graph"]["path"], "ref.edges");

    std::ofstream(path("bad.json")) << R"({"depht": 3})";
    EXPECT_EQ(cli({"run", "--config", path("bad.json"), "--out", path("x")}), 2);
    EXPECT_NE(err_.str().find("depht"), std::string::npos);
}

TEST_F(CliTest, OutDirFromEnvironment) {
    ::setenv(cli::kOutDirEnv, path("env").c_str(), 1);
    const int code = cli({"run", "--graph", reference(), "--depth", "3"});
    ::unsetenv(cli::kOutDirEnv);
    ASSERT_EQ(code, 0) << err_.str();
    EXPECT_TRUE(fs::exists(path("env/trace.csv")));
}

TEST(Config, JsonRoundTrip) {
    const auto cfg = cli::config_from_json(json::parse(R"({
        "graph": {"type": "er", "n": 6, "p": 0.4, "seed": 3},
        "delta_t": 0.02, "depth": 7, "lambda": 0.75, "w": 2.0,
        "noise": {"kind": "systematic", "epsilon_bar": 0.5, "seed": 11},
        "seeds": [1, 2], "epsilon_bars": [0.1], "lambdas": [0.5, 1.0], "draws": 9})"));
    EXPECT_EQ(cfg.graph.type, cli::GraphSource::Type::er);
    EXPECT_EQ(cfg.depth, 7U);
    EXPECT_EQ(cfg.noise.kind, NoiseKind::systematic);
    const auto again = cli::config_from_json(cli::config_to_json(cfg));
    EXPECT_EQ(cli::config_to_json(again), cli::config_to_json(cfg));
    EXPECT_THROW((void)cli::config_from_json(json::parse(R"({"noise": {"kind": "pink"}})")),
                 std::exception);
}

TEST(Io, RealsRoundTripAtSeventeenDigits) {
    std::mt19937_64 gen(5);
    for (int i = 0; i < 10000; ++i) {
        double x;
        const auto bits = gen();
        std::memcpy(&x, &bits, sizeof x);
        if (!std::isfinite(x)) {
            continue;
        }
        EXPECT_EQ(io::parse_real(io::format_real(x)), x);
    }
    EXPECT_THROW((void)io::parse_real("1.5x"), std::exception);
}

TEST(Io, CsvRoundTrip) {
    io::CsvTable t{{"a", "b"}, {{"1", "0.10000000000000001"}, {"2", ""}}};
    std::istringstream in(io::format_csv(t));
    const auto back = io::parse_csv(in);
    EXPECT_EQ(back.header, t.header);
    EXPECT_EQ(back.rows, t.rows);
    std::istringstream bad("a,b\n1,2,3\n");
    EXPECT_THROW((void)io::parse_csv(bad), ParseError);
}

} // namespace
} // namespace falqon
