#include "amplikit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "amplikit/closed_form.hpp"
#include "amplikit/core.hpp"
#include "amplikit/numform.hpp"
#include "amplikit/operator_builder.hpp"
#include "amplikit/parallel.hpp"
#include "amplikit/phase_condition.hpp"
#include "amplikit/recurrence.hpp"
#include "amplikit/statevector.hpp"
#include "amplikit/verify.hpp"

namespace amplikit {

namespace {

using Value = std::variant<std::monostate, double, long, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;
};

std::string value_to_csv(const Value& v) {
    if (std::holds_alternative<std::monostate>(v)) return "";
    if (const double* d = std::get_if<double>(&v)) return format_real(*d);
    if (const long* i = std::get_if<long>(&v)) return std::to_string(*i);
    if (const bool* b = std::get_if<bool>(&v)) return format_bool(*b);
    return std::get<std::string>(v);
}

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << value_to_csv(row[c]);
        }
        out << "\n";
    }
}

void write_json(const Table& table, std::ostream& out) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::string& key = table.columns[c];
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, std::monostate>) {
                        obj[key] = nullptr;
                    } else {
                        obj[key] = v;
                    }
                },
                row[c]);
        }
        rows.push_back(std::move(obj));
    }
    out << rows.dump(2) << "\n";
}

void emit(const Table& table, const std::string& format, std::ostream& out) {
    if (format == "json") {
        write_json(table, out);
    } else {
        write_csv(table, out);
    }
}

std::vector<double> parse_angle_list(const std::string& text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string token =
            text.substr(start, comma == std::string::npos ? std::string::npos
                                                          : comma - start);
        out.push_back(parse_angle(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// "start:stop:count" with both ends in the angle grammar, inclusive.
std::vector<double> parse_grid_spec(const std::string& text) {
    const std::size_t c1 = text.find(':');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                                   : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw MalformedInput("grid spec must look like start:stop:count");
    }
    const double start = parse_angle(text.substr(0, c1));
    const double stop = parse_angle(text.substr(c1 + 1, c2 - c1 - 1));
    const long count = std::strtol(text.c_str() + c2 + 1, nullptr, 10);
    if (count < 2) throw MalformedInput("grid needs at least 2 points");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        out.push_back(start + (stop - start) * static_cast<double>(i) /
                                  static_cast<double>(count - 1));
    }
    return out;
}

struct ConfigArgs {
    std::string theta_text = "0";
    std::string phi_text = "0";
    double p = 0.0;
    std::string utg_text;
    bool has_p = false;

    PhaseConfig build() const {
        const double theta = parse_angle(theta_text);
        const double phi = parse_angle(phi_text);
        if (!utg_text.empty()) {
            return make_config(theta, phi, parse_complex(utg_text));
        }
        if (!has_p) throw MalformedInput("one of --p or --utg is required");
        return make_config(theta, phi, Complex{p, 0.0});
    }

    // "re,im" or the JSON object form {"re": x, "im": y}
    static Complex parse_complex(const std::string& text) {
        const std::size_t brace = text.find('{');
        if (brace != std::string::npos) {
            const nlohmann::json parsed =
                nlohmann::json::parse(text, nullptr, false);
            if (parsed.is_discarded() || !parsed.contains("re") ||
                !parsed.contains("im") || !parsed["re"].is_number() ||
                !parsed["im"].is_number()) {
                throw MalformedInput("--utg JSON form must be "
                                     "{\"re\": x, \"im\": y}");
            }
            return Complex{parsed["re"].get<double>(),
                           parsed["im"].get<double>()};
        }
        const std::size_t comma = text.find(',');
        if (comma == std::string::npos) {
            throw MalformedInput("--utg expects re,im");
        }
        const auto strict = [&](const std::string& part) {
            char* end = nullptr;
            const double v = std::strtod(part.c_str(), &end);
            if (part.empty() || end != part.c_str() + part.size()) {
                throw MalformedInput("bad number '" + part + "' in --utg");
            }
            return v;
        };
        return Complex{strict(text.substr(0, comma)),
                       strict(text.substr(comma + 1))};
    }
};

void add_config_options(CLI::App* cmd, ConfigArgs& args) {
    cmd->add_option("--theta", args.theta_text,
                    "rotation angle of the initial-state operator (angle "
                    "grammar: 0.5, pi, -pi/6, 2pi/3)");
    cmd->add_option("--phi", args.phi_text,
                    "rotation angle of the desired-state operator");
    auto* p_opt = cmd->add_option("--p", args.p, "overlap modulus in (0,1)");
    p_opt->each([&args](const std::string&) { args.has_p = true; });
    auto* utg = cmd->add_option("--utg", args.utg_text,
                                "complex overlap as re,im");
    utg->excludes(p_opt);
}

int cmd_analyze(const ConfigArgs& args, const std::string& format,
                std::ostream& out) {
    const PhaseConfig cfg = args.build();
    const PhaseVerdict v = check_condition(cfg);
    Table table;
    table.columns = {"sin_delta",  "beta_norm", "ratio",  "satisfied",
                     "k_opt_real", "k_opt_int", "period", "b_at_k_opt"};
    std::vector<Value> row{v.sin_delta, v.beta_norm, v.ratio, v.satisfied};
    if (v.satisfied) {
        row.emplace_back(*v.k_opt_real);
        row.emplace_back(*v.k_opt_int);
        row.emplace_back(v.period);
        row.emplace_back(amplitude_closed(cfg, *v.k_opt_real).b_norm);
    } else {
        row.emplace_back(std::monostate{});
        row.emplace_back(std::monostate{});
        row.emplace_back(v.period);
        row.emplace_back(std::monostate{});
    }
    table.rows.push_back(std::move(row));
    emit(table, format, out);
    return v.satisfied ? 0 : 1;
}

int cmd_trace(const ConfigArgs& args, int k_max, const std::string& format,
              std::ostream& out) {
    const PhaseConfig cfg = args.build();
    const IterationMatrix m = build_iteration_matrix(cfg);
    Table table;
    table.columns = {"k", "b_rec", "b_closed", "b_poly", "residual"};
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    for (int k = 1; k <= k_max; ++k) {
        const Complex na = m.alpha * a + m.lambda * b;
        const Complex nb = m.beta * a + m.delta * b;
        a = na;
        b = nb;
        const double b_rec = std::abs(b);
        const double b_closed =
            amplitude_closed(cfg, static_cast<double>(k)).b_norm;
        double residual = std::abs(b_rec - b_closed);
        std::vector<Value> row{static_cast<long>(k), b_rec, b_closed};
        if (k <= kMaxPolynomialStep) {
            const double b_poly = std::abs(polynomial_b(m, k));
            residual = std::max(residual, std::abs(b_poly - b_closed));
            residual = std::max(residual, std::abs(b_poly - b_rec));
            row.emplace_back(b_poly);
        } else {
            row.emplace_back(std::monostate{});
        }
        row.emplace_back(residual);
        table.rows.push_back(std::move(row));
    }
    emit(table, format, out);
    return 0;
}

int cmd_sweep(double p, const std::string& mode,
              const std::vector<double>& angles,
              const std::vector<double>& thetas,
              const std::vector<double>& phis, const std::string& format,
              std::ostream& out) {
    Table table;
    if (mode == "identical") {
        table.columns = {"phi", "k_ol_real", "k_ol_floor"};
        table.rows.resize(angles.size());
        parallel_for_index(angles.size(), [&](std::size_t i) {
            const double k = identical_k(angles[i], p);
            table.rows[i] = {angles[i], k, static_cast<long>(std::floor(k))};
        });
    } else if (mode == "grover_compare") {
        table.columns = {"phi", "k_og_real", "k_og_floor", "k_ol_real",
                         "k_ol_floor"};
        const double kg = grover_k(p);
        table.rows.resize(angles.size());
        parallel_for_index(angles.size(), [&](std::size_t i) {
            const double kl = identical_k(angles[i], p);
            table.rows[i] = {angles[i], kg, static_cast<long>(std::floor(kg)),
                             kl, static_cast<long>(std::floor(kl))};
        });
    } else if (mode == "condition_region") {
        table.columns = {"theta", "phi", "satisfied", "ratio"};
        std::vector<std::pair<double, double>> points;
        for (double theta : thetas) {
            for (double phi : phis) points.emplace_back(theta, phi);
        }
        table.rows.resize(points.size());
        parallel_for_index(points.size(), [&](std::size_t i) {
            const auto [theta, phi] = points[i];
            std::vector<Value> row{theta, phi};
            if (std::abs(std::cos(phi)) < kDegenerateCosPhi) {
                row.emplace_back(std::monostate{});
                row.emplace_back(std::monostate{});
            } else {
                const PhaseVerdict v =
                    check_condition(make_config(theta, phi, Complex{p, 0.0}));
                row.emplace_back(v.satisfied);
                row.emplace_back(v.ratio);
            }
            table.rows[i] = std::move(row);
        });
    } else {
        throw MalformedInput("unknown sweep mode '" + mode + "'");
    }
    emit(table, format, out);
    return 0;
}

int cmd_simulate(int qubits, std::size_t gamma, std::size_t tau,
                 const std::string& theta_text, const std::string& phi_text,
                 int k_max, const std::string& unitary_kind,
                 std::uint64_t seed, const std::string& unitary_path,
                 const std::string& format, std::ostream& out) {
    UnitaryOp unitary;
    if (unitary_kind == "wh") {
        unitary = WalshHadamard{qubits};
    } else if (unitary_kind == "random") {
        unitary = random_unitary(std::size_t{1} << qubits, seed);
    } else if (unitary_kind == "file") {
        unitary = load_unitary_file(unitary_path);
    } else {
        throw MalformedInput("unknown unitary kind '" + unitary_kind + "'");
    }
    const SearchInstance inst =
        make_instance(qubits, gamma, tau, parse_angle(theta_text),
                      parse_angle(phi_text), std::move(unitary));
    const PhaseConfig cfg = inst.config();
    const IterationMatrix m = build_iteration_matrix(cfg);

    Table table;
    table.columns = {"k",      "a_re",    "a_im",     "b_re",
                     "b_im",   "b_norm",  "b_model",  "b_closed",
                     "residual", "norm_drift"};
    StateVector state =
        StateVector::basis(std::size_t{1} << qubits, inst.gamma_index);
    AmplitudePair model;
    double worst_residual = 0.0;
    for (int k = 0; k <= k_max; ++k) {
        if (k > 0) {
            apply_Q(state, inst);
            const Complex na = m.alpha * model.a + m.lambda * model.b;
            const Complex nb = m.beta * model.a + m.delta * model.b;
            model = AmplitudePair{na, nb, k};
        }
        const ExtractedPair ext = extract_pair(state, inst);
        double residual = ext.residual;
        residual = std::max(residual, std::abs(ext.a - model.a));
        residual = std::max(residual, std::abs(ext.b - model.b));
        std::vector<Value> row{static_cast<long>(k), ext.a.real(), ext.a.imag(),
                               ext.b.real(),         ext.b.imag(),
                               std::abs(ext.b),      std::abs(model.b)};
        if (cfg.degenerate) {
            row.emplace_back(std::monostate{});
        } else {
            const double closed =
                amplitude_closed(cfg, static_cast<double>(k)).b_norm;
            residual = std::max(residual, std::abs(std::abs(ext.b) - closed));
            row.emplace_back(closed);
        }
        row.emplace_back(residual);
        row.emplace_back(std::abs(state.norm() - 1.0));
        table.rows.push_back(std::move(row));
        worst_residual = std::max(worst_residual, residual);
    }
    emit(table, format, out);
    return worst_residual > 1e-9 ? 1 : 0;
}

int cmd_verify(const std::vector<std::string>& which, std::ostream& out) {
    const std::vector<verify::CheckResult> results = verify::run(which);
    std::size_t passed = 0;
    for (const verify::CheckResult& r : results) {
        out << (r.passed ? "ok   " : "FAIL ") << r.section << "/" << r.name
            << "  (" << r.detail << ")\n";
        if (r.passed) ++passed;
    }
    out << passed << "/" << results.size() << " checks passed\n";
    return passed == results.size() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"amplitude analysis for phase-rotated quantum search"};
    app.require_subcommand(1);
    std::string format = "csv";
    app.add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    ConfigArgs analyze_args;
    auto* analyze = app.add_subcommand(
        "analyze", "phase condition, optimal step count, and period");
    add_config_options(analyze, analyze_args);

    ConfigArgs trace_args;
    int trace_kmax = 16;
    auto* trace = app.add_subcommand(
        "trace", "per-step |b_k| from recurrence, sine form, and polynomial");
    add_config_options(trace, trace_args);
    trace->add_option("--k-max", trace_kmax, "last step to print")
        ->check(CLI::PositiveNumber);

    double sweep_p = 0.0;
    std::string sweep_mode = "identical";
    std::string sweep_angles;
    std::string sweep_thetas, sweep_phis, sweep_grid;
    auto* sweep = app.add_subcommand("sweep", "tabulate over angle grids");
    sweep->add_option("--p", sweep_p, "overlap modulus in (0,1)")->required();
    sweep->add_option("--mode", sweep_mode,
                      "identical | grover_compare | condition_region")
        ->check(CLI::IsMember({"identical", "grover_compare",
                               "condition_region"}))
        ->capture_default_str();
    sweep->add_option("--angles", sweep_angles,
                      "comma-separated phi list (identical, grover_compare)");
    sweep->add_option("--thetas", sweep_thetas,
                      "comma-separated theta list (condition_region)");
    sweep->add_option("--phis", sweep_phis,
                      "comma-separated phi list (condition_region)");
    sweep->add_option("--grid", sweep_grid,
                      "start:stop:count applied to both axes "
                      "(condition_region)");

    int sim_qubits = 2;
    std::size_t sim_gamma = 0, sim_tau = 0;
    std::string sim_theta = "0", sim_phi = "0";
    int sim_kmax = 10;
    std::string sim_unitary = "wh";
    std::uint64_t sim_seed = 1;
    std::string sim_file;
    auto* simulate = app.add_subcommand(
        "simulate", "full state-vector run cross-checked against the 2x2 model");
    simulate->add_option("--n", sim_qubits, "qubit count (<= 14)")->required();
    simulate->add_option("--gamma", sim_gamma, "initial basis index")
        ->required();
    simulate->add_option("--tau", sim_tau, "desired basis index")->required();
    simulate->add_option("--theta", sim_theta, "initial-state rotation angle");
    simulate->add_option("--phi", sim_phi, "desired-state rotation angle");
    simulate->add_option("--k-max", sim_kmax, "number of Q applications")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--unitary", sim_unitary, "wh | random | file")
        ->check(CLI::IsMember({"wh", "random", "file"}))
        ->capture_default_str();
    simulate->add_option("--seed", sim_seed, "seed for --unitary random");
    simulate->add_option("--unitary-file", sim_file,
                         "path for --unitary file");

    std::vector<std::string> verify_sections;
    auto* verify_cmd = app.add_subcommand(
        "verify", "run the full invariant suite (or selected sections)");
    verify_cmd->add_option(
        "--section", verify_sections,
        "restrict to named sections (appendix3, induction, agreement, "
        "condition, corollaries, table1, periods, simulation); repeatable");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_args, format, out);
        if (*trace) return cmd_trace(trace_args, trace_kmax, format, out);
        if (*sweep) {
            std::vector<double> angles, thetas, phis;
            if (sweep_mode == "condition_region") {
                if (!sweep_grid.empty()) {
                    thetas = parse_grid_spec(sweep_grid);
                    phis = thetas;
                } else {
                    if (sweep_thetas.empty() || sweep_phis.empty()) {
                        throw MalformedInput(
                            "condition_region needs --grid or --thetas/--phis");
                    }
                    thetas = parse_angle_list(sweep_thetas);
                    phis = parse_angle_list(sweep_phis);
                }
            } else {
                if (sweep_angles.empty()) {
                    throw MalformedInput("--angles is required for this mode");
                }
                angles = parse_angle_list(sweep_angles);
            }
            return cmd_sweep(sweep_p, sweep_mode, angles, thetas, phis, format,
                             out);
        }
        if (*simulate) {
            if (sim_unitary == "file" && sim_file.empty()) {
                throw MalformedInput("--unitary file needs --unitary-file");
            }
            return cmd_simulate(sim_qubits, sim_gamma, sim_tau, sim_theta,
                                sim_phi, sim_kmax, sim_unitary, sim_seed,
                                sim_file, format, out);
        }
        if (*verify_cmd) return cmd_verify(verify_sections, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand given\n";
    return 2;
}

}  // namespace amplikit
