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

#include <random>

#include "gtest/gtest.h"
#include "revmul/io.hpp"
#include "revmul/synth.hpp"
#include "test_util.hpp"

using namespace revmul;

namespace {

std::size_t count_lines_starting(const std::string &text, const std::string &prefix) {
    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (text.compare(pos, prefix.size(), prefix) == 0) {
            count++;
        }
        pos = eol == std::string::npos ? text.size() : eol + 1;
    }
    return count;
}

std::size_t error_line(std::string_view text) {
    try {
        parse_netlist(text);
    } catch (const ParseError &e) {
        return e.line_number();
    }
    return 0;
}

}  // namespace

TEST(write_netlist, empty_circuit) {
    Circuit c(RegisterLayout({{"Q", 0, 3}}));
    EXPECT_EQ(write_netlist(c), "rev 1\nqubits 3\nreg Q 0 2\n");
}

TEST(write_netlist, ror4) {
    EXPECT_EQ(write_netlist(build_ror(4)),
              "rev 1\n"
              "qubits 4\n"
              "reg P 0 3\n"
              "swap 0 3\n"
              "swap 1 2\n"
              "---\n"
              "swap 0 2\n"
              "---\n");
}

TEST(write_netlist, multiplier_header) {
    const std::string text = write_netlist(build_multiplier(2));
    EXPECT_EQ(text.rfind("rev 1\nqubits 9\nreg A 0 1\nreg B 2 3\nanc P 4 7 0\nanc Zcin 8 8 0\nccx 0 2 5\n", 0), 0u);
    EXPECT_EQ(count_lines_starting(text, "ccx ") + count_lines_starting(text, "cswap ") +
                  count_lines_starting(text, "swap "),
              21u);
}

TEST(parse_netlist, round_trip_is_canonical) {
    std::vector<Circuit> circuits{build_multiplier(1), build_multiplier(3), build_addnop(4), build_ror(9),
                                  build_controlled_ror(6, 0)};
    Circuit partial(RegisterLayout({{"Q", 0, 3}, {"Z", 3, 1, LineRole::ancilla, true}}));
    partial.append(cnot(0, 1)).mark_stage().append(toffoli(0, 1, 3));
    circuits.push_back(partial);
    for (const auto &c : circuits) {
        const std::string once = write_netlist(c);
        const Circuit back = parse_netlist(once);
        EXPECT_EQ(back, c);
        EXPECT_EQ(write_netlist(back), once);
    }
}

TEST(parse_netlist, comments_and_blank_lines) {
    Circuit c = parse_netlist("# header\nrev 1\n\nqubits 2  # two lines\nreg X 0 1\nswap 0 1 # go\n");
    EXPECT_EQ(c.size(), 1u);
    EXPECT_EQ(c.gates()[0], swap_gate(0, 1));
}

TEST(parse_netlist, errors_carry_line_numbers) {
    EXPECT_EQ(error_line("rev 1\nqubits 3\nreg Q 0 2\nccx 0 0 1\n"), 4u);
    EXPECT_EQ(error_line("rev 1\nreg Q 0 2\n"), 2u);
    EXPECT_EQ(error_line("rev 1\n"), 1u);  // missing qubits header at end of input
    EXPECT_EQ(error_line("rev 2\nqubits 1\n"), 1u);
    EXPECT_EQ(error_line("rev 1\nqubits 3\nreg Q 0 2\nnot 1\n"), 4u);
    EXPECT_EQ(error_line("rev 1\nqubits 3\nreg Q 0 2\ncx 0 3\n"), 4u);
    EXPECT_EQ(error_line("rev 1\nqubits 3\nreg Q 0 1\nreg Q 2 2\n"), 4u);
    EXPECT_EQ(error_line("rev 1\nqubits 3\nreg Q 0 1\ncx 0 1\n"), 4u);  // line 2 uncovered
    EXPECT_EQ(error_line("rev 1\nqubits 3\nreg Q 0 2\ncx 0 1\n---\n---\n"), 6u);
    EXPECT_EQ(error_line("rev 1\nqubits 3\nreg Q 0 2\ncx 0 x\n"), 4u);
    EXPECT_EQ(error_line("rev 1\nqubits 3\nanc Q 0 2 2\n"), 3u);
    try {
        parse_netlist("rev 1\nqubits 3\nreg Q 0 2\nccx 0 0 1\n");
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("same line"), std::string::npos);
    }
}

TEST(parse_netlist, simulates_like_the_original) {
    std::mt19937_64 rng(100);
    std::vector<Circuit> circuits;
    for (std::size_t n : {1, 2, 4, 8, 16}) {
        circuits.push_back(build_multiplier(n));
        circuits.push_back(build_addnop(n));
    }
    for (std::size_t w : {2, 3, 17, 32, 65}) {
        circuits.push_back(build_ror(w));
    }
    for (const auto &c : circuits) {
        const Circuit back = parse_netlist(write_netlist(c));
        for (int k = 0; k < 100; k++) {
            BitState s = test_util::random_state(rng, c.width());
            ASSERT_EQ(run(back, s), run(c, s));
        }
    }
}

TEST(export_qasm, gate_statements) {
    Circuit c(RegisterLayout({{"Q", 0, 3}}));
    c.append(swap_gate(0, 1)).append(fredkin(2, 0, 1)).append(cnot(1, 2)).append(toffoli(0, 1, 2));
    const std::string q = export_qasm(c);
    EXPECT_NE(q.find("OPENQASM 2.0;\n"), std::string::npos);
    EXPECT_NE(q.find("qreg q[3];\n"), std::string::npos);
    EXPECT_NE(q.find("swap q[0],q[1];\n"), std::string::npos);
    EXPECT_NE(q.find("cswap q[2],q[0],q[1];\n"), std::string::npos);
    EXPECT_NE(q.find("cx q[1],q[2];\n"), std::string::npos);
    EXPECT_NE(q.find("ccx q[0],q[1],q[2];\n"), std::string::npos);
}

TEST(export_qasm, statement_count_matches_gate_count) {
    for (std::size_t n : {2, 5}) {
        Circuit c = build_multiplier(n);
        const std::string q = export_qasm(c);
        const std::size_t statements =
            count_lines_starting(q, "ccx ") + count_lines_starting(q, "cswap ") + count_lines_starting(q, "swap ");
        EXPECT_EQ(statements, c.size());
    }
    EXPECT_EQ(count_lines_starting(export_qasm(build_multiplier(2)), "ccx ") +
                  count_lines_starting(export_qasm(build_multiplier(2)), "cswap ") +
                  count_lines_starting(export_qasm(build_multiplier(2)), "swap "),
              21u);
    EXPECT_NE(export_qasm(build_multiplier(2)).find("// P = q[4..7], ancilla initialised to 0"), std::string::npos);
}

TEST(metrics_json, multiplier_metrics) {
    const std::string j = metrics_json(structural_metrics(build_multiplier(4)));
    EXPECT_NE(j.find("\"quantum_cost\": 403"), std::string::npos);
    EXPECT_NE(j.find("\"garbage_outputs\": null"), std::string::npos);
    EXPECT_LT(j.find("\"gate_count\""), j.find("\"quantum_cost\""));
}

TEST(metrics_json, verify_report) {
    const std::string j = metrics_json(verify_multiplier(2, VerifyMode::exhaustive()));
    EXPECT_NE(j.find("\"ok\": true"), std::string::npos);
    EXPECT_NE(j.find("\"garbage_outputs\": 0"), std::string::npos);
    const std::string r = metrics_json(verify_multiplier(3, VerifyMode::randomized(10, 5)));
    EXPECT_NE(r.find("\"seed\": 5"), std::string::npos);
}

TEST(metrics_json, comparison_row) {
    const std::string j = metrics_json(comparison_table(8, TableKind::ancilla));
    EXPECT_NE(j.find("\"imp_kotiyal\": \"79.52\""), std::string::npos);
    EXPECT_NE(j.find("\"printed_imp_kotiyal\": \"79.51\""), std::string::npos);
    EXPECT_NE(j.find("\"tolerance\": \"0.02\""), std::string::npos);
}
