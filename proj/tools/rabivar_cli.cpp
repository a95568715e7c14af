// rabivar_cli.cpp — command-line front end: single-point solves, parameter
// sweeps, figure datasets, and the validation suite
//
// Exit codes: 0 success, 1 numerical/runtime failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rabivar/json_io.hpp"
#include "rabivar/sweep.hpp"
#include "rabivar/validate.hpp"

namespace {

using nlohmann::json;
using namespace rabivar;

json load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("config: cannot open '" + path + "'");
    json j;
    try {
        is >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: expected a flat JSON object");
    return j;
}

// Flags override the config file; the config file overrides defaults.
template <typename T>
void apply_config(const json& cfg, const CLI::Option* opt, const char* key, T& var) {
    if (opt != nullptr && opt->count() > 0) return;
    const auto it = cfg.find(key);
    if (it == cfg.end()) return;
    try {
        var = it->get<T>();
    } catch (const json::exception&) {
        throw std::invalid_argument(std::string("config: bad value for key '") + key + "'");
    }
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (const char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<SolveMethod> parse_methods(const std::string& csv) {
    std::vector<SolveMethod> out;
    for (const std::string& tok : split_list(csv)) {
        const auto m = parse_method(tok);
        if (!m) throw std::invalid_argument("unknown method '" + tok + "'");
        out.push_back(*m);
    }
    return out;
}

std::vector<SweepOutput> parse_outputs(const std::string& csv) {
    std::vector<SweepOutput> out;
    for (const std::string& tok : split_list(csv)) {
        const auto o = parse_output(tok);
        if (!o) throw std::invalid_argument("unknown output '" + tok + "'");
        out.push_back(*o);
    }
    return out;
}

struct SolveArgs {
    double omega = 1.0, Omega = 0.0, epsilon = 0.0, g = 0.0, tol = 1e-10;
    int n_max = 2048;
    std::string method = "variational";
    bool fp_iterate = false;
    CLI::Option *o_omega = nullptr, *o_Omega = nullptr, *o_epsilon = nullptr, *o_g = nullptr,
                *o_tol = nullptr, *o_n_max = nullptr, *o_method = nullptr, *o_fp = nullptr;
};

struct SweepArgs {
    std::string axis = "g";
    double omega = 1.0, Omega = 0.0, epsilon = 0.0, g = 0.0, tol = 1e-10;
    // NaN = "not set": each endpoint independently falls back to the axis default
    double range_start = std::nan(""), range_stop = std::nan("");
    int points = 201, n_max = 2048;
    std::string methods = "variational,grwa,exact";
    std::string outputs = "energy";
    std::string out = "sweep.csv";
    CLI::Option *o_axis = nullptr, *o_omega = nullptr, *o_Omega = nullptr, *o_epsilon = nullptr,
                *o_g = nullptr, *o_tol = nullptr, *o_start = nullptr, *o_stop = nullptr,
                *o_points = nullptr, *o_n_max = nullptr, *o_methods = nullptr,
                *o_outputs = nullptr, *o_out = nullptr;
};

struct FigureArgs {
    std::string id;
    std::string out;
    double range_start = 0.0, range_stop = 0.0;
    int points = 201;
    CLI::Option *o_out = nullptr, *o_start = nullptr, *o_stop = nullptr, *o_points = nullptr;
};

struct ValidateArgs {
    std::string preset = "quick";
    CLI::Option* o_preset = nullptr;
};

int run_solve(const SolveArgs& a) {
    const ModelParams p(a.omega, a.Omega, a.epsilon, a.g);
    json report;
    if (a.method == "exact") {
        TruncationPolicy policy;
        policy.n_max = a.n_max;
        policy.n_start = std::min(policy.n_start, a.n_max);
        policy.energy_tol = a.tol;
        report = solve_report(p, ground_state(p, policy));
    } else if (a.method == "variational") {
        report = solve_report(solve_numeric(p, SolveOptions{a.tol, 200}));
    } else if (a.method == "fixed-point") {
        FixedPointOptions opts;
        opts.iterate = a.fp_iterate;
        report = solve_report(solve_fixed_point(p, opts));
    } else if (a.method == "grwa") {
        report = solve_report(solve_grwa(p));
    } else {
        throw std::invalid_argument("unknown method '" + a.method + "'");
    }
    std::cout << report.dump(2) << "\n";
    return 0;
}

int run_sweep_cmd(const SweepArgs& a) {
    SweepSpec spec;
    const auto axis = parse_axis(a.axis);
    if (!axis) throw std::invalid_argument("unknown axis '" + a.axis + "'");
    spec.axis = *axis;
    spec.range = default_axis_range(spec.axis);
    if (!std::isnan(a.range_start)) spec.range.start = a.range_start;
    if (!std::isnan(a.range_stop)) spec.range.stop = a.range_stop;
    spec.range.points = a.points;
    spec.fixed = ModelParams(a.omega, a.Omega, a.epsilon, a.g);
    spec.methods = parse_methods(a.methods);
    spec.outputs = parse_outputs(a.outputs);
    spec.solve_options.tol = a.tol;
    spec.truncation.n_max = a.n_max;
    spec.truncation.n_start = std::min(spec.truncation.n_start, a.n_max);
    spec.validate();
    write_csv_file(spec, run_sweep(spec), a.out);
    std::cout << "wrote " << a.out << " (" << spec.range.points << " rows)\n";
    return 0;
}

int run_figure(const FigureArgs& a) {
    SweepSpec spec = figure_spec(a.id);
    if (a.o_points->count() > 0) spec.range.points = a.points;
    if (a.o_start->count() > 0) spec.range.start = a.range_start;
    if (a.o_stop->count() > 0) spec.range.stop = a.range_stop;
    spec.validate();
    const std::string out = a.out.empty() ? a.id + ".csv" : a.out;
    write_csv_file(spec, run_sweep(spec), out);
    std::cout << "wrote " << out << " (" << spec.range.points << " rows)\n";
    return 0;
}

int run_validate(const ValidateArgs& a) {
    ValidatePreset preset;
    if (a.preset == "quick") {
        preset = ValidatePreset::quick;
    } else if (a.preset == "full") {
        preset = ValidatePreset::full;
    } else {
        throw std::invalid_argument("unknown preset '" + a.preset + "' (expected quick or full)");
    }
    const ValidationReport report = run_validation(preset);
    for (const CheckResult& c : report.checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    }
    if (!report.margin_table.empty()) {
        std::cout << "\n" << report.margin_table;
    }
    std::cout << (report.all_pass() ? "validation passed\n" : "validation FAILED\n");
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ground-state solvers for the biased quantum Rabi model"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "flat key-value JSON config; flags override it");

    SolveArgs sa;
    CLI::App* solve = app.add_subcommand("solve", "solve one parameter point (JSON on stdout)");
    sa.o_omega = solve->add_option("--omega", sa.omega, "oscillator frequency (> 0)");
    sa.o_Omega = solve->add_option("--Omega", sa.Omega, "two-level splitting");
    sa.o_epsilon = solve->add_option("--epsilon", sa.epsilon, "bias");
    sa.o_g = solve->add_option("--g", sa.g, "coupling strength");
    sa.o_method = solve->add_option("--method", sa.method,
                                    "variational | fixed-point | grwa | exact");
    sa.o_tol = solve->add_option("--tol", sa.tol,
                                 "gradient tolerance (variational) / energy tolerance (exact)");
    sa.o_n_max = solve->add_option("--n-max", sa.n_max, "Fock truncation cap (exact)");
    sa.o_fp = solve->add_flag("--fp-iterate", sa.fp_iterate,
                              "iterate the fixed point to self-consistency");

    SweepArgs wa;
    CLI::App* sweep = app.add_subcommand("sweep", "sweep one parameter, CSV to --out");
    wa.o_axis = sweep->add_option("--axis", wa.axis, "swept parameter: g | Omega | epsilon");
    wa.o_start = sweep->add_option("--range-start", wa.range_start, "axis start");
    wa.o_stop = sweep->add_option("--range-stop", wa.range_stop, "axis stop");
    wa.o_points = sweep->add_option("--points", wa.points, "number of rows (>= 2)");
    wa.o_omega = sweep->add_option("--omega", wa.omega, "fixed oscillator frequency");
    wa.o_Omega = sweep->add_option("--Omega", wa.Omega, "fixed two-level splitting");
    wa.o_epsilon = sweep->add_option("--epsilon", wa.epsilon, "fixed bias");
    wa.o_g = sweep->add_option("--g", wa.g, "fixed coupling");
    wa.o_methods = sweep->add_option("--methods", wa.methods, "comma list of methods");
    wa.o_outputs = sweep->add_option("--outputs", wa.outputs, "comma list of outputs");
    wa.o_tol = sweep->add_option("--tol", wa.tol, "solver tolerance");
    wa.o_n_max = sweep->add_option("--n-max", wa.n_max, "Fock truncation cap (exact)");
    wa.o_out = sweep->add_option("--out", wa.out, "output CSV path");

    FigureArgs fa;
    CLI::App* figure = app.add_subcommand("figure", "write one figure dataset as CSV");
    figure->add_option("id", fa.id, "fig1a..fig1d, fig2a..fig2f, fig3a..fig3d, fig4a, fig4b")
        ->required();
    fa.o_out = figure->add_option("--out", fa.out, "output CSV path (default <id>.csv)");
    fa.o_points = figure->add_option("--points", fa.points, "number of rows");
    fa.o_start = figure->add_option("--range-start", fa.range_start, "axis start override");
    fa.o_stop = figure->add_option("--range-stop", fa.range_stop, "axis stop override");

    ValidateArgs va;
    CLI::App* validate = app.add_subcommand("validate", "run the acceptance property suite");
    va.o_preset = validate->add_option("--preset", va.preset, "quick | full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) {
            const json cfg = load_config(config_path);
            apply_config(cfg, sa.o_omega, "omega", sa.omega);
            apply_config(cfg, sa.o_Omega, "Omega", sa.Omega);
            apply_config(cfg, sa.o_epsilon, "epsilon", sa.epsilon);
            apply_config(cfg, sa.o_g, "g", sa.g);
            apply_config(cfg, sa.o_method, "method", sa.method);
            apply_config(cfg, sa.o_tol, "tol", sa.tol);
            apply_config(cfg, sa.o_n_max, "n-max", sa.n_max);
            apply_config(cfg, sa.o_fp, "fp-iterate", sa.fp_iterate);
            apply_config(cfg, wa.o_axis, "axis", wa.axis);
            apply_config(cfg, wa.o_start, "range-start", wa.range_start);
            apply_config(cfg, wa.o_stop, "range-stop", wa.range_stop);
            apply_config(cfg, wa.o_points, "points", wa.points);
            apply_config(cfg, wa.o_omega, "omega", wa.omega);
            apply_config(cfg, wa.o_Omega, "Omega", wa.Omega);
            apply_config(cfg, wa.o_epsilon, "epsilon", wa.epsilon);
            apply_config(cfg, wa.o_g, "g", wa.g);
            apply_config(cfg, wa.o_methods, "methods", wa.methods);
            apply_config(cfg, wa.o_outputs, "outputs", wa.outputs);
            apply_config(cfg, wa.o_tol, "tol", wa.tol);
            apply_config(cfg, wa.o_n_max, "n-max", wa.n_max);
            apply_config(cfg, wa.o_out, "out", wa.out);
            apply_config(cfg, fa.o_out, "out", fa.out);
            apply_config(cfg, fa.o_points, "points", fa.points);
            apply_config(cfg, fa.o_start, "range-start", fa.range_start);
            apply_config(cfg, fa.o_stop, "range-stop", fa.range_stop);
            apply_config(cfg, va.o_preset, "preset", va.preset);
        }
        if (solve->parsed()) return run_solve(sa);
        if (sweep->parsed()) return run_sweep_cmd(wa);
        if (figure->parsed()) return run_figure(fa);
        if (validate->parsed()) return run_validate(va);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const MinimizationError& e) {
        json diag{{"error", e.what()},
                  {"best_lambda", e.best_lambda()},
                  {"best_energy", e.best_energy()},
                  {"gradient_residual", e.gradient_residual()}};
        std::cerr << diag.dump(2) << "\n";
        return 1;
    } catch (const TruncationError& e) {
        json hist = json::array();
        for (const auto& [n, energy] : e.history()) {
            hist.push_back({{"N", n}, {"energy", energy}});
        }
        json diag{{"error", e.what()}, {"history", hist}};
        std::cerr << diag.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
