// Copyright 2026 The revmul Authors
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

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "gtest/gtest.h"
#include "revmul/io.hpp"

using namespace revmul;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("revmul_cli_test_" + name)).string();
}

}  // namespace

TEST(cli, parse_assignments) {
    auto v = cli::parse_assignments({"A=3,B=0x1f", "C=0b101"});
    EXPECT_EQ(v, (RegisterValues{{"A", 3}, {"B", 31}, {"C", 5}}));
    EXPECT_THROW(cli::parse_assignments({"A3"}), std::invalid_argument);
    EXPECT_THROW(cli::parse_assignments({"A=3,A=4"}), std::invalid_argument);
    EXPECT_THROW(cli::parse_assignments({"A=-1"}), std::invalid_argument);
    EXPECT_THROW(cli::parse_assignments({"A=12z"}), std::invalid_argument);
}

TEST(cli, build_mul_n4) {
    const auto path = temp_path("mul4.rev");
    auto r = run_cli({"build", "mul", "--n", "4", "-o", path});
    ASSERT_EQ(r.code, cli::exit_ok) << r.err;
    EXPECT_NE(r.out.find("quantum_cost 403"), std::string::npos);
    EXPECT_NE(r.out.find("gates 89"), std::string::npos);
    EXPECT_EQ(parse_netlist(read_text_file(path)).size(), 89u);
}

TEST(cli, build_ror_width8) {
    auto r = run_cli({"build", "ror", "--width", "8"});
    ASSERT_EQ(r.code, cli::exit_ok);
    EXPECT_NE(r.err.find("asap_depth 6"), std::string::npos);
    EXPECT_NE(r.out.find("swap 0 7"), std::string::npos);
    EXPECT_NE(r.err.find("swap 7)"), std::string::npos);
}

TEST(cli, build_usage_errors) {
    EXPECT_EQ(run_cli({"build", "mul", "--n", "0"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"build", "mul"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"build", "nand", "--n", "2"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"build", "cror", "--width", "4", "--control-line", "2"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"--help"}).code, cli::exit_ok);
}

TEST(cli, build_qasm) {
    auto r = run_cli({"build", "mul", "--n", "2", "--format", "qasm"});
    ASSERT_EQ(r.code, cli::exit_ok);
    EXPECT_EQ(r.out.rfind("OPENQASM 2.0;", 0), 0u);
}

TEST(cli, sim_multiplier) {
    const auto p2 = temp_path("mul2.rev");
    const auto p4 = temp_path("mul4s.rev");
    ASSERT_EQ(run_cli({"build", "mul", "--n", "2", "-o", p2}).code, 0);
    ASSERT_EQ(run_cli({"build", "mul", "--n", "4", "-o", p4}).code, 0);
    EXPECT_EQ(run_cli({"sim", p2, "A=3,B=3"}).out, "P=9 A=3 B=3 Zcin=0\n");
    EXPECT_EQ(run_cli({"sim", p4, "A=0", "B=13"}).out, "P=0 A=0 B=13 Zcin=0\n");
    auto missing = run_cli({"sim", p2, "A=3"});
    EXPECT_EQ(missing.code, cli::exit_usage);
    EXPECT_NE(missing.err.find("register B"), std::string::npos);
    EXPECT_EQ(run_cli({"sim", temp_path("does_not_exist.rev"), "A=1"}).code, cli::exit_usage);
}

TEST(cli, sim_trace) {
    const auto p = temp_path("ror4.rev");
    ASSERT_EQ(run_cli({"build", "ror", "--width", "4", "-o", p}).code, 0);
    auto r = run_cli({"sim", p, "P=1", "--trace"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "stage 0: P=1\nstage 1: P=8\nstage 2: P=8\nP=8\n");
}

TEST(cli, sim_parse_error_exit_code) {
    const auto p = temp_path("bad.rev");
    write_text_file(p, "rev 1\nqubits 2\nreg Q 0 1\nccx 0 0 1\n");
    auto r = run_cli({"sim", p, "Q=0"});
    EXPECT_EQ(r.code, cli::exit_usage);
    EXPECT_NE(r.err.find("line 4"), std::string::npos);
}

TEST(cli, verify) {
    auto exhaustive = run_cli({"verify", "mul", "--n", "4", "--exhaustive"});
    EXPECT_EQ(exhaustive.code, cli::exit_ok);
    EXPECT_NE(exhaustive.out.find("256 cases"), std::string::npos);
    EXPECT_NE(exhaustive.out.find("garbage_outputs 0"), std::string::npos);

    auto random = run_cli({"verify", "mul", "--n", "16", "--random", "1000", "--seed", "7"});
    EXPECT_EQ(random.code, cli::exit_ok);
    EXPECT_NE(random.out.find("seed 7 (--seed)"), std::string::npos);
    EXPECT_EQ(run_cli({"verify", "mul", "--n", "16", "--random", "1000", "--seed", "7"}).out, random.out);

    auto ror = run_cli({"verify", "ror", "--width", "9", "--exhaustive"});
    EXPECT_EQ(ror.code, cli::exit_ok);
    EXPECT_NE(ror.out.find("512 cases"), std::string::npos);

    EXPECT_EQ(run_cli({"verify", "cror", "--width", "6"}).code, cli::exit_ok);
    EXPECT_EQ(run_cli({"verify", "addnop", "--n", "3"}).code, cli::exit_ok);
    EXPECT_EQ(run_cli({"verify", "mul", "--n", "8", "--exhaustive"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"verify", "mul", "--n", "4", "--exhaustive", "--random", "5"}).code, cli::exit_usage);
}

TEST(cli, verify_default_mode_and_env_seed) {
    auto small = run_cli({"verify", "mul", "--n", "5"});
    EXPECT_NE(small.out.find("1024 cases (exhaustive)"), std::string::npos);
    ::setenv(cli::seed_env_var, "99", 1);
    auto big = run_cli({"verify", "mul", "--n", "7"});
    ::unsetenv(cli::seed_env_var);
    EXPECT_EQ(big.code, 0);
    EXPECT_NE(big.out.find("seed 99 (REVMUL_SEED)"), std::string::npos);
    EXPECT_NE(big.out.find("1000 cases (randomized)"), std::string::npos);
}

TEST(cli, verify_json_report) {
    auto r = run_cli({"verify", "mul", "--n", "2", "--json", "-"});
    EXPECT_NE(r.out.find("\"ok\": true"), std::string::npos);
}

TEST(cli, metrics) {
    auto r = run_cli({"metrics", "mul", "--n", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("quantum_cost 403"), std::string::npos);
    EXPECT_NE(r.out.find("-> match"), std::string::npos);
    auto j = run_cli({"metrics", "addnop", "--n", "4", "--format", "json"});
    EXPECT_NE(j.out.find("\"quantum_cost\": 85"), std::string::npos);
    EXPECT_EQ(run_cli({"metrics"}).code, cli::exit_usage);
}

TEST(cli, compare) {
    auto md = run_cli({"compare", "--max-n", "1024", "--which", "ancilla", "--format", "md"});
    EXPECT_EQ(md.code, 0);
    EXPECT_NE(md.out.find("| 1024 | 2049 | 1054719 | 2096128 |"), std::string::npos);
    EXPECT_TRUE(md.err.empty());
    auto garbage = run_cli({"compare", "--which", "garbage", "--format", "csv"});
    EXPECT_EQ(garbage.code, 0);
    EXPECT_NE(garbage.out.find("4,22,36,100.00\n"), std::string::npos);
    EXPECT_EQ(run_cli({"compare", "--max-n", "48"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"compare", "--which", "karatsuba", "--max-n", "8"}).code, 0);
    EXPECT_EQ(run_cli({"compare", "--format", "xml"}).code, cli::exit_usage);
}

TEST(cli, export_formats) {
    const auto p = temp_path("mul3.rev");
    ASSERT_EQ(run_cli({"build", "mul", "--n", "3", "-o", p}).code, 0);
    EXPECT_EQ(run_cli({"export", p, "--format", "rev"}).out, read_text_file(p));
    EXPECT_NE(run_cli({"export", p}).out.find("qreg q[13];"), std::string::npos);
    EXPECT_NE(run_cli({"export", p, "--format", "json"}).out.find("\"ancilla_inputs\": 7"), std::string::npos);
}

TEST(cli, check_formulas) {
    auto r = run_cli({"check-formulas", "--max-n", "12"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"ok\": true"), std::string::npos);
}
