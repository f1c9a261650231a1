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

#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "revmul/analysis.hpp"
#include "revmul/io.hpp"
#include "revmul/metrics.hpp"
#include "revmul/synth.hpp"

namespace revmul::cli {

namespace {

// Thrown for bad parameters detected after option parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_number(const std::string &text) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
        if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
            value = std::stoull(text.substr(2), &used, 16);
            used += 2;
        } else if (text.rfind("0b", 0) == 0 || text.rfind("0B", 0) == 0) {
            value = std::stoull(text.substr(2), &used, 2);
            used += 2;
        } else {
            value = std::stoull(text, &used, 10);
        }
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size() || text.front() == '-' || text.front() == '+') {
        throw std::invalid_argument("malformed number '" + text + "'");
    }
    return value;
}

struct Seed {
    std::uint64_t value;
    std::string source;
};

Seed resolve_seed(const std::optional<std::uint64_t> &flag) {
    if (flag) {
        return {*flag, "--seed"};
    }
    if (const char *env = std::getenv(seed_env_var)) {
        try {
            return {parse_number(env), seed_env_var};
        } catch (const std::invalid_argument &) {
            throw UsageError(std::string(seed_env_var) + " is not a number: " + env);
        }
    }
    return {fallback_seed, "default"};
}

void print_summary(std::ostream &out, const Metrics &m) {
    out << "gates " << m.gate_count << " (cx " << m.count(GateKind::cnot) << ", ccx " << m.count(GateKind::toffoli)
        << ", cswap " << m.count(GateKind::fredkin) << ", swap " << m.count(GateKind::swap) << ")\n";
    out << "quantum_cost " << m.quantum_cost << "\n";
    out << "ancilla_inputs " << m.ancilla_inputs << "\n";
    out << "stages " << m.stage_count << "\n";
    out << "staged_delay " << m.staged_delay << "\n";
    if (m.asap_depth) {
        out << "asap_depth " << *m.asap_depth << "\n";
    }
}

// Result registers (multi-line ancillas) first, then data, then the rest.
std::vector<const Register *> print_order(const RegisterLayout &layout) {
    std::vector<const Register *> out;
    for (const auto &r : layout.registers()) {
        if (r.role == LineRole::ancilla && r.size > 1) {
            out.push_back(&r);
        }
    }
    for (const auto &r : layout.registers()) {
        if (r.role == LineRole::data) {
            out.push_back(&r);
        }
    }
    for (const auto &r : layout.registers()) {
        if (r.role == LineRole::ancilla && r.size == 1) {
            out.push_back(&r);
        }
    }
    return out;
}

std::string register_line(const BitState &state, const RegisterLayout &layout) {
    std::ostringstream out;
    bool first = true;
    for (const auto *r : print_order(layout)) {
        out << (first ? "" : " ") << r->name << "=";
        if (r->size <= 64) {
            out << read_register(state, *r);
        } else {
            out << "0b";
            for (std::size_t i = r->size; i-- > 0;) {
                out << (state.get(r->line(i)) ? '1' : '0');
            }
        }
        first = false;
    }
    return out.str();
}

std::size_t require_positive(const std::optional<std::size_t> &value, const char *flag, std::size_t minimum) {
    if (!value) {
        throw UsageError(std::string(flag) + " is required");
    }
    if (*value < minimum) {
        throw UsageError(std::string(flag) + " must be >= " + std::to_string(minimum));
    }
    return *value;
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
    } else {
        write_text_file(path, text);
    }
}

}  // namespace

RegisterValues parse_assignments(const std::vector<std::string> &words) {
    RegisterValues values;
    for (const auto &word : words) {
        std::stringstream ss(word);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) {
                continue;
            }
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0) {
                throw std::invalid_argument("expected NAME=value, got '" + item + "'");
            }
            std::string name = item.substr(0, eq);
            for (const auto &kv : values) {
                if (kv.first == name) {
                    throw std::invalid_argument("register " + name + " assigned twice");
                }
            }
            values.emplace_back(name, parse_number(item.substr(eq + 1)));
        }
    }
    return values;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Reversible add-and-rotate multiplier toolkit", "revmul"};
    app.require_subcommand(1);

    // build
    std::string build_block;
    std::optional<std::size_t> build_n, build_width;
    std::optional<std::size_t> build_control;
    std::string build_out, build_format = "rev";
    auto *build = app.add_subcommand("build", "Generate a circuit and print its structural metrics");
    build->add_option("block", build_block, "mul | addnop | ror | cror")
        ->required()
        ->check(CLI::IsMember({"mul", "addnop", "ror", "cror"}));
    build->add_option("--n", build_n, "Operand width (mul, addnop)");
    build->add_option("--width", build_width, "Register width (ror, cror)");
    build->add_option("--control-line", build_control, "Control line for cror: 0 or width (default width)");
    build->add_option("-o,--out", build_out, "Output file (stdout when omitted)");
    build->add_option("--format", build_format, "rev | qasm")->check(CLI::IsMember({"rev", "qasm"}));

    // sim
    std::string sim_file;
    std::vector<std::string> sim_inputs;
    bool sim_trace = false;
    auto *sim = app.add_subcommand("sim", "Simulate a .rev netlist on one basis state");
    sim->add_option("file", sim_file, ".rev netlist")->required();
    sim->add_option("inputs", sim_inputs, "Register assignments, e.g. A=3,B=0x5");
    sim->add_flag("--trace", sim_trace, "Print register values after every stage");

    // verify
    std::string verify_block;
    std::optional<std::size_t> verify_n, verify_width, verify_random;
    std::optional<std::uint64_t> verify_seed;
    bool verify_exhaustive = false;
    std::string verify_json;
    auto *verify = app.add_subcommand("verify", "Check a generated circuit against its behavioural oracle");
    verify->add_option("block", verify_block, "mul | addnop | ror | cror")
        ->required()
        ->check(CLI::IsMember({"mul", "addnop", "ror", "cror"}));
    verify->add_option("--n", verify_n, "Operand width (mul, addnop)");
    verify->add_option("--width", verify_width, "Register width (ror, cror)");
    auto *opt_exh = verify->add_flag("--exhaustive", verify_exhaustive, "Test every input");
    auto *opt_rand = verify->add_option("--random", verify_random, "Test this many seeded random inputs");
    opt_exh->excludes(opt_rand);
    verify->add_option("--seed", verify_seed, "Seed for --random");
    verify->add_option("--json", verify_json, "Also write the JSON report to this file ('-' for stdout)");

    // metrics
    std::string metrics_block, metrics_file, metrics_format = "text";
    std::optional<std::size_t> metrics_n;
    auto *metrics = app.add_subcommand("metrics", "Structural metrics beside the closed-form estimates");
    auto *opt_mblock = metrics->add_option("block", metrics_block, "mul | addnop | ror")
                           ->check(CLI::IsMember({"mul", "addnop", "ror"}));
    metrics->add_option("--n", metrics_n, "Operand width (ror spans 2n lines)");
    auto *opt_mfile = metrics->add_option("--file", metrics_file, "Measure a .rev netlist instead");
    opt_mblock->excludes(opt_mfile);
    metrics->add_option("--format", metrics_format, "text | json")->check(CLI::IsMember({"text", "json"}));

    // compare
    std::uint64_t compare_max_n = 1024;
    std::string compare_which = "ancilla", compare_format = "md", compare_out;
    auto *compare = app.add_subcommand("compare", "Regenerate the ancilla / garbage comparison tables");
    compare->add_option("--max-n", compare_max_n, "Largest N (4, 8, ..., 1024)");
    compare->add_option("--which", compare_which, "ancilla | garbage | karatsuba")
        ->check(CLI::IsMember({"ancilla", "garbage", "karatsuba"}));
    compare->add_option("--format", compare_format, "md | csv | json")->check(CLI::IsMember({"md", "csv", "json"}));
    compare->add_option("-o,--out", compare_out, "Output file (stdout when omitted)");

    // export
    std::string export_file, export_format = "qasm", export_out;
    auto *exp = app.add_subcommand("export", "Convert a .rev netlist");
    exp->add_option("file", export_file, ".rev netlist")->required();
    exp->add_option("--format", export_format, "qasm | rev | json")->check(CLI::IsMember({"qasm", "rev", "json"}));
    exp->add_option("-o,--out", export_out, "Output file (stdout when omitted)");

    // check-formulas
    std::uint64_t check_max_n = 64;
    auto *check = app.add_subcommand("check-formulas", "Compare built circuits with the closed forms for n = 2..max");
    check->add_option("--max-n", check_max_n, "Largest operand width");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return exit_ok;
        }
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (build->parsed()) {
            Circuit circuit;
            if (build_block == "mul") {
                circuit = build_multiplier(require_positive(build_n, "--n", 1));
            } else if (build_block == "addnop") {
                circuit = build_addnop(require_positive(build_n, "--n", 1));
            } else if (build_block == "ror") {
                circuit = build_ror(require_positive(build_width, "--width", 2));
            } else {
                const auto w = require_positive(build_width, "--width", 2);
                circuit = build_controlled_ror(w, static_cast<Line>(build_control.value_or(w)));
            }
            const std::string text = build_format == "qasm" ? export_qasm(circuit) : write_netlist(circuit);
            std::ostream &summary = build_out.empty() ? err : out;
            emit(text, build_out, out);
            print_summary(summary, structural_metrics(circuit));
            return exit_ok;
        }

        if (sim->parsed()) {
            const Circuit circuit = parse_netlist(read_text_file(sim_file));
            const BitState entry = load_registers(circuit.layout(), parse_assignments(sim_inputs));
            if (sim_trace) {
                const RunResult result = run_traced(circuit, entry);
                out << "stage 0: " << register_line(entry, circuit.layout()) << "\n";
                for (std::size_t k = 0; k < result.trace.size(); k++) {
                    out << "stage " << k + 1 << ": " << register_line(result.trace[k], circuit.layout()) << "\n";
                }
                out << register_line(result.state, circuit.layout()) << "\n";
            } else {
                out << register_line(run(circuit, entry), circuit.layout()) << "\n";
            }
            return exit_ok;
        }

        if (verify->parsed()) {
            const bool operand_block = verify_block == "mul" || verify_block == "addnop";
            const std::size_t size = operand_block ? require_positive(verify_n, "--n", 1)
                                                   : require_positive(verify_width, "--width", 2);
            const std::size_t exhaustive_limit = operand_block ? 6 : 20;
            const std::size_t default_exhaustive_limit = operand_block ? 5 : 12;
            VerifyMode mode;
            std::optional<Seed> seed;
            if (verify_exhaustive) {
                if (size > exhaustive_limit) {
                    throw UsageError("exhaustive verification supports size <= " + std::to_string(exhaustive_limit));
                }
                mode = VerifyMode::exhaustive();
            } else if (verify_random || size > default_exhaustive_limit) {
                seed = resolve_seed(verify_seed);
                const std::size_t count = verify_random.value_or(default_random_count);
                if (count == 0) {
                    throw UsageError("--random needs a positive count");
                }
                mode = VerifyMode::randomized(count, seed->value);
            } else {
                mode = VerifyMode::exhaustive();
            }
            if (seed) {
                out << "seed " << seed->value << " (" << seed->source << ")\n";
            }
            VerifyReport report;
            if (verify_block == "mul") {
                report = verify_multiplier(size, mode);
            } else if (verify_block == "addnop") {
                report = verify_addnop(size, mode);
            } else if (verify_block == "ror") {
                report = verify_rotate(size, mode);
            } else {
                report = verify_controlled_rotate(size, mode);
            }
            out << "verify " << verify_block << (operand_block ? " n=" : " width=") << size << ": "
                << (report.ok ? "ok" : "FAILED") << ", " << report.checked << " cases ("
                << (mode.kind == VerifyMode::Kind::exhaustive ? "exhaustive" : "randomized") << ")";
            if (report.certified_garbage_outputs) {
                out << ", garbage_outputs " << *report.certified_garbage_outputs;
            } else {
                out << ", " << report.failures << " failures";
            }
            out << "\n";
            for (const auto &ce : report.counterexamples) {
                out << "  counterexample:";
                for (const auto &[k, v] : ce.input) {
                    out << " " << k << "=" << v;
                }
                out << " ->";
                for (const auto &[k, v] : ce.got) {
                    out << " " << k << "=" << v;
                }
                out << "\n";
            }
            if (verify_json == "-") {
                out << metrics_json(report);
            } else if (!verify_json.empty()) {
                write_text_file(verify_json, metrics_json(report));
            }
            return report.ok ? exit_ok : exit_failed;
        }

        if (metrics->parsed()) {
            Metrics measured;
            std::optional<Metrics> formula;
            if (!metrics_file.empty()) {
                measured = structural_metrics(parse_netlist(read_text_file(metrics_file)));
            } else {
                if (metrics_block.empty()) {
                    throw UsageError("give a block (mul | addnop | ror) or --file");
                }
                const auto n = require_positive(metrics_n, "--n", 1);
                const BlockKind kind = parse_block_kind(metrics_block);
                measured = structural_metrics(revmul::build_block(kind, n));
                formula = formula_metrics(kind, n);
            }
            if (metrics_format == "json") {
                out << metrics_json(measured);
            } else {
                print_summary(out, measured);
            }
            if (formula) {
                const bool match = formula->gates_by_kind == measured.gates_by_kind &&
                                   formula->quantum_cost == measured.quantum_cost &&
                                   formula->ancilla_inputs == measured.ancilla_inputs &&
                                   formula->staged_delay == measured.staged_delay &&
                                   formula->stage_count == measured.stage_count;
                std::ostream &note = metrics_format == "json" ? err : out;
                note << "closed form: quantum_cost " << formula->quantum_cost << ", ancilla_inputs "
                     << formula->ancilla_inputs << ", staged_delay " << formula->staged_delay << " -> "
                     << (match ? "match" : "MISMATCH") << "\n";
                return match ? exit_ok : exit_failed;
            }
            return exit_ok;
        }

        if (compare->parsed()) {
            if (!on_table_ladder(compare_max_n)) {
                throw UsageError("--max-n " + std::to_string(compare_max_n) + " is not on the ladder 4, 8, ..., 1024");
            }
            if (compare_which == "karatsuba") {
                if (compare_format != "md") {
                    throw UsageError("the karatsuba table is only rendered as md");
                }
                emit(render_karatsuba_markdown(compare_max_n), compare_out, out);
                return exit_ok;
            }
            const auto table =
                comparison_table(compare_max_n, compare_which == "ancilla" ? TableKind::ancilla : TableKind::garbage);
            std::string text;
            if (compare_format == "md") {
                text = render_markdown(table);
            } else if (compare_format == "csv") {
                text = render_csv(table);
            } else {
                text = metrics_json(table);
            }
            emit(text, compare_out, out);
            for (const auto &f : table.flags) {
                err << "flag: n=" << f.n << " " << f.column << " computed " << f.computed << " printed " << f.printed
                    << "\n";
            }
            return table.flags.empty() ? exit_ok : exit_failed;
        }

        if (exp->parsed()) {
            const Circuit circuit = parse_netlist(read_text_file(export_file));
            std::string text;
            if (export_format == "qasm") {
                text = export_qasm(circuit);
            } else if (export_format == "rev") {
                text = write_netlist(circuit);
            } else {
                text = metrics_json(structural_metrics(circuit));
            }
            emit(text, export_out, out);
            return exit_ok;
        }

        if (check->parsed()) {
            if (check_max_n < 2) {
                throw UsageError("--max-n must be >= 2");
            }
            const auto report = check_formulas(check_max_n);
            out << metrics_json(report);
            return report.ok() ? exit_ok : exit_failed;
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace revmul::cli
