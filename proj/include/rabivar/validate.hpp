// validate.hpp — the acceptance property suite shared by the `validate` CLI
// subcommand and the acceptance test binary
//
// Each check returns pass/fail plus a one-line detail with the worst value and
// the parameter point where it occurred. Thresholds are pinned here; two of
// them are regression baselines recorded from first-run data where the stated
// guess was exceeded (see the notes next to kCaseTwoAccuracy).

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rabivar/exact.hpp"
#include "rabivar/model.hpp"
#include "rabivar/sweep.hpp"
#include "rabivar/variational.hpp"

namespace rabivar {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

enum class ValidatePreset { quick, full };

struct ValidationReport {
    std::vector<CheckResult> checks;
    std::string margin_table;  // full preset only
    bool all_pass() const {
        for (const CheckResult& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

// Acceptance grid: omega = 1 throughout.
inline const std::vector<double>& grid_Omega() {
    static const std::vector<double> v{0.1, 0.5, 1.0, 5.0};
    return v;
}
inline const std::vector<double>& grid_epsilon() {
    static const std::vector<double> v{0.0, 0.1, 0.5, 2.0};
    return v;
}
inline const std::vector<double>& grid_g() {
    static const std::vector<double> v{0.0, 0.1, 0.2, 0.3, 0.5, 0.7, 0.9, 1.2, 2.0};
    return v;
}

// Case-II relative-error bound. First-run data: max 5.9496e-2 at
// (omega=1, Omega=1, epsilon=0.5, g=0.9); the original 2e-2 guess was exceeded
// and the threshold re-baselined per the re-baselining protocol.
inline constexpr double kCaseTwoAccuracy = 6.0e-2;

// Fixed-point displacement bound for g <= 0.5 (first-run worst 3.22e-2).
inline constexpr double kFixedPointAccuracy = 5.0e-2;

// Case-III degradation factor between fig4b and fig4a peak errors
// (first-run ratio 3.36).
inline constexpr double kCaseThreeFactor = 3.0;

namespace detail {

// splitmix64-driven uniforms: portable, seed-stable across platforms.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    double uniform(double lo, double hi) {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        const double u = static_cast<double>(z >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }
};

inline std::string point_str(const ModelParams& p) {
    std::ostringstream os;
    os << "(omega=" << p.omega << ", Omega=" << p.Omega << ", epsilon=" << p.epsilon
       << ", g=" << p.g << ")";
    return os.str();
}

struct GridPoint {
    ModelParams params;
    double e_exact;
    double e_var;
    double lambda_var;
    double e_grwa;
};

// One pass of exact + variational + grwa over the 144-point grid; every grid
// check reuses this.
inline std::vector<GridPoint> solve_grid() {
    std::vector<GridPoint> out;
    out.reserve(grid_Omega().size() * grid_epsilon().size() * grid_g().size());
    for (const double Om : grid_Omega()) {
        for (const double eps : grid_epsilon()) {
            for (const double g : grid_g()) {
                const ModelParams p(1.0, Om, eps, g);
                GridPoint pt{p, 0.0, 0.0, 0.0, 0.0};
                pt.e_exact = ground_state(p).energy;
                const VariationalSolution vs = solve_numeric(p);
                pt.e_var = vs.energy;
                pt.lambda_var = vs.lambda;
                pt.e_grwa = solve_grwa(p).energy;
                out.push_back(pt);
            }
        }
    }
    return out;
}

}  // namespace detail

// 1. E_exact - 1e-9 <= E_var at every grid point; the whole grid pass must
//    stay under the two-minute target.
inline CheckResult check_variational_upper_bound(const std::vector<detail::GridPoint>& grid,
                                                 double grid_elapsed_s) {
    CheckResult r{"variational-upper-bound", true, ""};
    double worst = std::numeric_limits<double>::infinity();
    std::string worst_at;
    for (const auto& pt : grid) {
        const double margin = pt.e_var - pt.e_exact;
        if (margin < worst) {
            worst = margin;
            worst_at = detail::point_str(pt.params);
        }
        if (margin < -1e-9) r.pass = false;
    }
    if (grid_elapsed_s > 120.0) r.pass = false;
    std::ostringstream os;
    os << "min(E_var - E_exact) = " << worst << " at " << worst_at << " (allowed >= -1e-9); grid pass took "
       << grid_elapsed_s << " s (target < 120 s)";
    r.detail = os.str();
    return r;
}

// 2. E_var <= E_grwa + 1e-12 everywhere, and E_grwa - E_var > 1e-8 whenever
//    Omega > 0, g > 0 and |lambda* - g/omega| > 1e-6. Also the module
//    invariant E_var <= E_0(lambda_fixed-point) + 1e-12.
inline CheckResult check_grwa_dominance(const std::vector<detail::GridPoint>& grid) {
    CheckResult r{"grwa-dominance", true, ""};
    int weak_viol = 0;
    int strict_viol = 0;
    std::string first_viol;
    for (const auto& pt : grid) {
        const ModelParams& p = pt.params;
        if (pt.e_var > pt.e_grwa + 1e-12) {
            ++weak_viol;
            if (first_viol.empty()) first_viol = "weak at " + detail::point_str(p);
        }
        const double e_fp = energy_functional(p, solve_fixed_point(p).lambda);
        if (pt.e_var > e_fp + 1e-12) {
            ++weak_viol;
            if (first_viol.empty()) first_viol = "vs fixed-point at " + detail::point_str(p);
        }
        const double dlam = std::abs(pt.lambda_var - p.g / p.omega);
        if (p.Omega > 0.0 && p.g > 0.0 && dlam > 1e-6) {
            const double margin = pt.e_grwa - pt.e_var;
            if (!(margin > 1e-8)) {
                ++strict_viol;
                if (first_viol.empty()) {
                    std::ostringstream os;
                    os << "strict margin " << margin << " <= 1e-8 with |lambda-g/omega| = " << dlam
                       << " at " << detail::point_str(p);
                    first_viol = os.str();
                }
            }
        }
    }
    r.pass = (weak_viol == 0 && strict_viol == 0);
    std::ostringstream os;
    os << weak_viol << " weak and " << strict_viol << " strict-margin violations";
    if (!first_viol.empty()) os << "; first: " << first_viol;
    r.detail = os.str();
    return r;
}

// 3. Case-II sub-grid (Omega/omega <= 1, g <= 1) relative energy error.
inline CheckResult check_case2_accuracy(const std::vector<detail::GridPoint>& grid) {
    CheckResult r{"case-ii-accuracy", true, ""};
    double worst = 0.0;
    std::string worst_at;
    for (const auto& pt : grid) {
        const ModelParams& p = pt.params;
        if (p.Omega / p.omega > 1.0 || p.g > 1.0) continue;
        if (regime_label(classify_regime(p).case_label) != std::string("II")) continue;
        const double rel = std::abs(pt.e_var - pt.e_exact) / std::abs(pt.e_exact);
        if (rel > worst) {
            worst = rel;
            worst_at = detail::point_str(p);
        }
    }
    r.pass = worst <= kCaseTwoAccuracy;
    std::ostringstream os;
    os << "max |E_var - E_exact|/|E_exact| = " << worst << " at " << worst_at
       << " (bound " << kCaseTwoAccuracy << ", re-baselined from first-run data)";
    r.detail = os.str();
    return r;
}

// 4. fig2c sweep: grwa mean photon constant to 1e-15, variational strictly
//    decreasing, exact decreasing up to 1e-8 slack.
inline CheckResult check_grwa_photon_deficiency(int points) {
    CheckResult r{"grwa-photon-deficiency", true, ""};
    SweepSpec spec = figure_spec("fig2c");
    spec.range.points = points;
    spec.methods = {SolveMethod::variational, SolveMethod::grwa, SolveMethod::exact};
    spec.outputs = {SweepOutput::mean_photon};
    const SweepTable table = run_sweep(spec);
    // columns: variational.mean_photon, grwa.mean_photon, exact.mean_photon
    double grwa_spread = 0.0;
    double var_worst_step = -std::numeric_limits<double>::infinity();
    double exact_worst_step = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        grwa_spread = std::max(grwa_spread,
                               std::abs(table.rows[i].cells[1] - table.rows[0].cells[1]));
        var_worst_step = std::max(var_worst_step,
                                  table.rows[i].cells[0] - table.rows[i - 1].cells[0]);
        exact_worst_step = std::max(exact_worst_step,
                                    table.rows[i].cells[2] - table.rows[i - 1].cells[2]);
    }
    const bool grwa_const = grwa_spread <= 1e-15;
    const bool var_strict = var_worst_step < 0.0;
    const bool exact_mono = exact_worst_step <= 1e-8;
    r.pass = grwa_const && var_strict && exact_mono;
    std::ostringstream os;
    os << "grwa spread " << grwa_spread << " (<= 1e-15), variational worst step " << var_worst_step
       << " (< 0), exact worst step " << exact_worst_step << " (<= 1e-8)";
    r.detail = os.str();
    return r;
}

// 5. Route equivalence: the closed-form energy functional vs the n=0 lower
//    eigenvalue of the subspace block, at random points.
inline CheckResult check_route_equivalence(int npoints) {
    CheckResult r{"route-equivalence", true, ""};
    detail::Rng rng(0x5eed0001ULL);
    double worst = 0.0;
    std::string worst_at;
    for (int i = 0; i < npoints; ++i) {
        const ModelParams p(rng.uniform(0.5, 2.0), rng.uniform(0.0, 6.0), rng.uniform(-3.0, 3.0),
                            rng.uniform(0.0, 2.0));
        const double lambda = rng.uniform(-2.0, 2.0);
        const double direct = energy_functional(p, lambda);
        const double via_block = diagonalize_subspace(build_subspace(p, 0, lambda)).e_minus;
        const double diff = std::abs(direct - via_block);
        if (diff > worst) {
            worst = diff;
            std::ostringstream os;
            os << detail::point_str(p) << ", lambda=" << lambda;
            worst_at = os.str();
        }
    }
    r.pass = worst <= 1e-12;
    std::ostringstream os;
    os << "max |E_0(lambda) - e_minus(n=0)| = " << worst << " over " << npoints
       << " random points at " << worst_at << " (<= 1e-12)";
    r.detail = os.str();
    return r;
}

// 6. Analytic gradient vs central finite differences, step 1e-6.
inline CheckResult check_gradient_consistency() {
    CheckResult r{"gradient-consistency", true, ""};
    detail::Rng rng(0x5eed0002ULL);
    constexpr double h = 1e-6;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const ModelParams p(rng.uniform(0.5, 2.0), rng.uniform(0.0, 6.0), rng.uniform(-3.0, 3.0),
                            rng.uniform(0.0, 2.0));
        const double lambda = rng.uniform(-1.5, 1.5);
        const double fd =
            (energy_functional(p, lambda + h) - energy_functional(p, lambda - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(fd - energy_gradient(p, lambda)));
    }
    r.pass = worst <= 1e-6;
    std::ostringstream os;
    os << "max |analytic - central-difference| = " << worst << " over 50 random points (<= 1e-6)";
    r.detail = os.str();
    return r;
}

// 7. Fixed-point displacement vs numeric minimizer for g <= 0.5.
inline CheckResult check_fixed_point_quality() {
    CheckResult r{"fixed-point-quality", true, ""};
    double worst = 0.0;
    std::string worst_at;
    for (const double Om : grid_Omega()) {
        for (const double eps : grid_epsilon()) {
            for (const double g : grid_g()) {
                if (g > 0.5) continue;
                const ModelParams p(1.0, Om, eps, g);
                const double lam_num = solve_numeric(p).lambda;
                const double lam_fp = solve_fixed_point(p).lambda;
                const double rel = std::abs(lam_fp - lam_num) / std::max(lam_num, 1e-6);
                if (rel > worst) {
                    worst = rel;
                    worst_at = detail::point_str(p);
                }
            }
        }
    }
    r.pass = worst <= kFixedPointAccuracy;
    std::ostringstream os;
    os << "max |lambda_fp - lambda_num| / max(lambda_num, 1e-6) = " << worst << " at " << worst_at
       << " (<= " << kFixedPointAccuracy << ")";
    r.detail = os.str();
    return r;
}

// 8. Exact-solver closed forms: g=0 and the decoupled displaced oscillator.
inline CheckResult check_exact_closed_forms() {
    CheckResult r{"exact-closed-forms", true, ""};
    double worst_e = 0.0;
    double worst_n = 0.0;
    for (const double Om : grid_Omega()) {
        for (const double eps : grid_epsilon()) {
            const ModelParams p(1.0, Om, eps, 0.0);
            const double expected = -0.5 * std::sqrt(eps * eps + Om * Om);
            worst_e = std::max(worst_e, std::abs(ground_state(p).energy - expected));
        }
    }
    for (const double g : grid_g()) {
        const ModelParams p(1.0, 0.0, 0.0, g);
        const ExactSolution sol = ground_state(p);
        worst_e = std::max(worst_e, std::abs(sol.energy + g * g));
        worst_n = std::max(worst_n, std::abs(sol.observables.mean_photon - g * g));
    }
    r.pass = worst_e <= 1e-10 && worst_n <= 1e-8;
    std::ostringstream os;
    os << "max energy deviation " << worst_e << " (<= 1e-10), max mean-photon deviation "
       << worst_n << " (<= 1e-8)";
    r.detail = os.str();
    return r;
}

// 9. Case-III degradation: peak |E_var - E_exact| over fig4b exceeds fig4a by
//    the recorded factor.
inline CheckResult check_case3_degradation(int points) {
    CheckResult r{"case-iii-degradation", true, ""};
    const auto peak_error = [points](const char* fig) {
        SweepSpec spec = figure_spec(fig);
        spec.range.points = points;
        spec.methods = {SolveMethod::variational, SolveMethod::exact};
        spec.outputs = {SweepOutput::energy};
        const SweepTable t = run_sweep(spec);
        double mx = 0.0;
        for (const SweepRow& row : t.rows) {
            mx = std::max(mx, std::abs(row.cells[0] - row.cells[1]));
        }
        return mx;
    };
    const double e4a = peak_error("fig4a");
    const double e4b = peak_error("fig4b");
    r.pass = e4b > kCaseThreeFactor * e4a;
    std::ostringstream os;
    os << "fig4b peak " << e4b << " vs fig4a peak " << e4a << " (ratio "
       << (e4a > 0 ? e4b / e4a : 0.0) << ", required > " << kCaseThreeFactor << ")";
    r.detail = os.str();
    return r;
}

// 10 (CSV clause). Identical specs produce byte-identical files.
inline CheckResult check_csv_determinism() {
    CheckResult r{"csv-determinism", true, ""};
    SweepSpec spec;
    spec.axis = SweepAxis::g;
    spec.range = {0.0, 1.0, 7};
    spec.fixed = ModelParams(1.0, 0.5, 0.1, 0.0);
    spec.methods = {SolveMethod::variational, SolveMethod::fixed_point, SolveMethod::grwa};
    spec.outputs = {SweepOutput::energy, SweepOutput::lambda};
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    const fs::path a = dir / "rabivar_determinism_a.csv";
    const fs::path b = dir / "rabivar_determinism_b.csv";
    write_csv_file(spec, run_sweep(spec), a.string());
    write_csv_file(spec, run_sweep(spec), b.string());
    const auto slurp = [](const fs::path& path) {
        std::ifstream is(path, std::ios::binary);
        std::ostringstream ss;
        ss << is.rdbuf();
        return ss.str();
    };
    const std::string ca = slurp(a);
    const std::string cb = slurp(b);
    fs::remove(a);
    fs::remove(b);
    r.pass = !ca.empty() && ca == cb;
    r.detail = r.pass ? "two identical sweep invocations wrote byte-identical CSV"
                      : "CSV output differed between identical invocations";
    return r;
}

inline std::string margin_table(const std::vector<detail::GridPoint>& grid) {
    std::ostringstream os;
    os << "# omega Omega epsilon g E_exact E_var E_grwa var-exact grwa-var\n";
    char buf[256];
    for (const auto& pt : grid) {
        std::snprintf(buf, sizeof(buf), "%g %g %g %g %.12g %.12g %.12g %.3e %.3e\n",
                      pt.params.omega, pt.params.Omega, pt.params.epsilon, pt.params.g, pt.e_exact,
                      pt.e_var, pt.e_grwa, pt.e_var - pt.e_exact, pt.e_grwa - pt.e_var);
        os << buf;
    }
    return os.str();
}

inline ValidationReport run_validation(ValidatePreset preset) {
    const int sweep_points = (preset == ValidatePreset::full) ? 201 : 41;
    const int route_points = (preset == ValidatePreset::full) ? 1000 : 250;

    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<detail::GridPoint> grid = detail::solve_grid();
    const double grid_elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    ValidationReport report;
    report.checks.push_back(check_variational_upper_bound(grid, grid_elapsed));
    report.checks.push_back(check_grwa_dominance(grid));
    report.checks.push_back(check_case2_accuracy(grid));
    report.checks.push_back(check_grwa_photon_deficiency(sweep_points));
    report.checks.push_back(check_route_equivalence(route_points));
    report.checks.push_back(check_gradient_consistency());
    report.checks.push_back(check_fixed_point_quality());
    report.checks.push_back(check_exact_closed_forms());
    report.checks.push_back(check_case3_degradation(sweep_points));
    report.checks.push_back(check_csv_determinism());
    if (preset == ValidatePreset::full) report.margin_table = margin_table(grid);
    return report;
}

}  // namespace rabivar
