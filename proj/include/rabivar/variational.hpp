// variational.hpp — coherent-state variational ground state of the biased
// quantum Rabi model, plus the fixed-displacement GRWA baseline
//
// The trial state is |phi_0> = cos(theta/2) |-_z, lambda> + sin(theta/2) |+_z, -lambda>
// with |±lambda> coherent states. Optimizing theta analytically leaves the
// one-parameter functional
//
//     E_0(lambda) = omega lambda^2 - 2 g lambda - sqrt(epsilon^2 + Omega^2 e^{-4 lambda^2}) / 2
//
// which is minimized over lambda. The GRWA baseline evaluates the same
// functional at the fixed polaron displacement lambda = g/omega; the
// fixed-point solver applies one substitution step of the stationarity
// condition starting from the small-g closed form.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "rabivar/errors.hpp"
#include "rabivar/model.hpp"
#include "rabivar/subspace.hpp"

namespace rabivar {

enum class Method { numeric_min, fixed_point, grwa };

inline const char* method_tag(Method m) {
    switch (m) {
        case Method::numeric_min: return "numeric-min";
        case Method::fixed_point: return "fixed-point";
        case Method::grwa: return "grwa";
    }
    return "?";
}

struct VariationalSolution {
    ModelParams params;
    double lambda = 0.0;             // optimal displacement
    double theta = 0.0;              // spin-mixing angle, [0, pi] for Omega >= 0
    double energy = 0.0;             // E_0(lambda)
    double alpha = 1.0;              // cos(theta/2)
    double beta = 0.0;               // sin(theta/2)
    Method method = Method::numeric_min;
    Observables observables;
    double gradient_residual = 0.0;  // |dE_0/dlambda| at the returned lambda
};

// E_0(lambda)
inline double energy_functional(const ModelParams& p, double lambda) {
    if (!std::isfinite(lambda)) throw std::domain_error("energy_functional: lambda must be finite");
    const double w = p.Omega * p.Omega * std::exp(-4.0 * lambda * lambda);
    return p.omega * lambda * lambda - 2.0 * p.g * lambda -
           0.5 * std::sqrt(p.epsilon * p.epsilon + w);
}

// dE_0/dlambda = 2 omega lambda - 2 g + 2 lambda W / sqrt(epsilon^2 + W),
// W = Omega^2 e^{-4 lambda^2}
inline double energy_gradient(const ModelParams& p, double lambda) {
    if (!std::isfinite(lambda)) throw std::domain_error("energy_gradient: lambda must be finite");
    const double w = p.Omega * p.Omega * std::exp(-4.0 * lambda * lambda);
    const double base = 2.0 * p.omega * lambda - 2.0 * p.g;
    if (w == 0.0) return base;
    return base + 2.0 * lambda * w / std::sqrt(p.epsilon * p.epsilon + w);
}

// d^2E_0/dlambda^2, used for Newton steps inside the minimizer.
inline double energy_curvature(const ModelParams& p, double lambda) {
    const double w = p.Omega * p.Omega * std::exp(-4.0 * lambda * lambda);
    if (w == 0.0) return 2.0 * p.omega;
    const double u = p.epsilon * p.epsilon + w;
    const double l2 = lambda * lambda;
    return 2.0 * p.omega + (2.0 * w / std::sqrt(u)) * (1.0 - 8.0 * l2 * (1.0 - 0.5 * w / u));
}

// Minimizing spin angle at given lambda:
//   sin(theta) = Omega e^{-2 lambda^2} / sqrt(Omega^2 e^{-4 lambda^2} + epsilon^2)
//   cos(theta) = epsilon / sqrt(Omega^2 e^{-4 lambda^2} + epsilon^2)
// For Omega >= 0 this lands in [0, pi]; the fully decoupled corner
// Omega = epsilon = 0 maps to theta = 0.
inline double optimal_theta(const ModelParams& p, double lambda) {
    return std::atan2(p.Omega * std::exp(-2.0 * lambda * lambda), p.epsilon);
}

// Closed-form observables of the trial state at displacement lambda.
inline Observables ground_observables(const ModelParams& p, double lambda) {
    Observables o;
    o.mean_photon = lambda * lambda;
    o.sz_correlation = -2.0 * lambda;
    const double num = p.Omega * std::exp(-4.0 * lambda * lambda);
    o.sigma_x = (num == 0.0)
                    ? 0.0
                    : num / std::sqrt(p.epsilon * p.epsilon +
                                      p.Omega * p.Omega * std::exp(-4.0 * lambda * lambda));
    return o;
}

// Recompute the closed-form observables from a solution's stored lambda.
inline Observables observables(const VariationalSolution& sol) {
    return ground_observables(sol.params, sol.lambda);
}

struct SolveOptions {
    double tol = 1e-10;  // tolerance on |dE_0/dlambda|, in units of omega
    int max_iter = 200;  // refinement budget per gradient root
};

namespace detail {

inline VariationalSolution make_solution(const ModelParams& p, double lambda, Method method) {
    VariationalSolution s;
    s.params = p;
    s.lambda = lambda;
    s.method = method;
    s.energy = energy_functional(p, lambda);
    s.theta = optimal_theta(p, lambda);
    s.alpha = std::cos(0.5 * s.theta);
    s.beta = std::sin(0.5 * s.theta);
    s.observables = ground_observables(p, lambda);
    s.gradient_residual = std::abs(energy_gradient(p, lambda));
    return s;
}

struct BestIterate {
    double lambda = 0.0;
    double energy = 0.0;
    double residual = std::numeric_limits<double>::infinity();
};

// Safeguarded Newton on the gradient inside a sign-change bracket [a, b].
// Newton steps that leave the bracket fall back to bisection; the bracket
// shrinks every iteration, so the loop terminates or hits max_iter.
inline double refine_gradient_root(const ModelParams& p, double a, double b, double ga, double gb,
                                   double tol, int max_iter, BestIterate& best) {
    if (ga == 0.0) return a;
    if (gb == 0.0) return b;
    double x = 0.5 * (a + b);
    for (int it = 0; it < max_iter; ++it) {
        const double gx = energy_gradient(p, x);
        const double res = std::abs(gx);
        if (res < best.residual) best = {x, energy_functional(p, x), res};
        if (res <= tol) return x;
        if ((gx < 0.0) == (ga < 0.0)) {
            a = x;
            ga = gx;
        } else {
            b = x;
            gb = gx;
        }
        const double h = energy_curvature(p, x);
        double next = (h != 0.0) ? x - gx / h : a;
        if (!(next > a && next < b)) next = 0.5 * (a + b);
        x = next;
    }
    throw MinimizationError("solve_numeric: |dE/dlambda| did not reach tolerance", best.lambda,
                            best.energy, best.residual);
}

// Global minimizer of E_0 over [0, g/omega] for g >= 0. The gradient is -2g at
// lambda = 0 and strictly positive beyond g/omega, so every minimum lies in
// the bracket. A 64-interval sign scan finds all gradient roots (E_0 can have
// two local minima near the crossover regime); the argmin over roots and
// bracket endpoints is returned, ties broken toward smaller lambda.
inline double minimize_displacement(const ModelParams& p, const SolveOptions& opts) {
    const double hi = p.g / p.omega;
    if (hi == 0.0) return 0.0;
    const double tol = opts.tol * p.omega;

    constexpr int kScanIntervals = 64;
    std::array<double, kScanIntervals + 1> x{};
    std::array<double, kScanIntervals + 1> grad{};
    for (int i = 0; i <= kScanIntervals; ++i) {
        x[i] = std::lerp(0.0, hi, static_cast<double>(i) / kScanIntervals);
        grad[i] = energy_gradient(p, x[i]);
    }

    BestIterate best;
    std::vector<double> candidates{0.0, hi};
    for (int i = 0; i < kScanIntervals; ++i) {
        if (grad[i] == 0.0) candidates.push_back(x[i]);
        if (grad[i] * grad[i + 1] < 0.0) {
            candidates.push_back(refine_gradient_root(p, x[i], x[i + 1], grad[i], grad[i + 1], tol,
                                                      opts.max_iter, best));
        }
    }
    if (grad[kScanIntervals] == 0.0) candidates.push_back(hi);

    std::sort(candidates.begin(), candidates.end());
    double best_lambda = candidates.front();
    double best_energy = energy_functional(p, best_lambda);
    for (const double c : candidates) {
        const double e = energy_functional(p, c);
        if (e < best_energy) {
            best_energy = e;
            best_lambda = c;
        }
    }
    return best_lambda;
}

}  // namespace detail

// Minimize E_0(lambda) numerically. Deterministic: identical inputs give
// bit-identical outputs. Throws MinimizationError when the gradient cannot be
// pushed below tol within max_iter refinement steps.
inline VariationalSolution solve_numeric(const ModelParams& p, const SolveOptions& opts = {}) {
    if (!(opts.tol > 0.0)) throw std::invalid_argument("solve_numeric: tol must be > 0");
    if (opts.max_iter < 1) throw std::invalid_argument("solve_numeric: max_iter must be >= 1");
    if (p.g < 0.0) {
        // E_0 is invariant under (g, lambda) -> (-g, -lambda)
        ModelParams q = p;
        q.g = -p.g;
        const double lambda = detail::minimize_displacement(q, opts);
        return detail::make_solution(p, -lambda, Method::numeric_min);
    }
    return detail::make_solution(p, detail::minimize_displacement(p, opts), Method::numeric_min);
}

struct FixedPointOptions {
    bool iterate = false;  // default: exactly one substitution step
    double tol = 1e-12;    // iteration mode only
    int max_iter = 100;    // iteration mode only
};

// Analytic approximation: lambda_0 = g / (omega + Omega^2 / sqrt(Omega^2 + epsilon^2)),
// then one substitution step
// lambda = g / (omega + Omega^2 e^{-4 lambda_0^2} / sqrt(Omega^2 e^{-4 lambda_0^2} + epsilon^2)).
// With iterate=true the substitution is repeated to self-consistency instead.
inline VariationalSolution solve_fixed_point(const ModelParams& p,
                                             const FixedPointOptions& opts = {}) {
    const auto step = [&p](double lam) {
        const double w = p.Omega * p.Omega * std::exp(-4.0 * lam * lam);
        if (w == 0.0) return p.g / p.omega;
        return p.g / (p.omega + w / std::sqrt(p.epsilon * p.epsilon + w));
    };
    const double w0 = p.Omega * p.Omega;
    const double lambda0 =
        (w0 == 0.0) ? p.g / p.omega
                    : p.g / (p.omega + w0 / std::sqrt(p.epsilon * p.epsilon + w0));
    double lambda = step(lambda0);
    if (opts.iterate) {
        for (int it = 0; it < opts.max_iter; ++it) {
            const double next = step(lambda);
            const bool done = std::abs(next - lambda) <= opts.tol;
            lambda = next;
            if (done) break;
        }
    }
    return detail::make_solution(p, lambda, Method::fixed_point);
}

// GRWA baseline: the displacement is pinned to g/omega instead of optimized,
// which makes the mean photon number g^2/omega^2 independent of Omega and
// epsilon.
inline VariationalSolution solve_grwa(const ModelParams& p) {
    return detail::make_solution(p, p.g / p.omega, Method::grwa);
}

// GRWA level ladder: eigenpairs of the 2x2 blocks at lambda = g/omega for
// n = 0..n_max.
inline std::vector<SubspaceEigen> grwa_spectrum(const ModelParams& p, int n_max) {
    if (n_max < 0) throw std::domain_error("grwa_spectrum: n_max must be non-negative");
    const double lambda = p.g / p.omega;
    std::vector<SubspaceEigen> levels;
    levels.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        levels.push_back(diagonalize_subspace(build_subspace(p, n, lambda)));
    }
    return levels;
}

// Applicability taxonomy of the single-coherent-state ansatz.
enum class RegimeCase {
    large_g_displaced,        // I
    small_g_variational,      // II
    intermediate_unreliable,  // III
};

inline const char* regime_label(RegimeCase c) {
    switch (c) {
        case RegimeCase::large_g_displaced: return "I";
        case RegimeCase::small_g_variational: return "II";
        case RegimeCase::intermediate_unreliable: return "III";
    }
    return "?";
}

struct RegimeDiagnostic {
    RegimeCase case_label = RegimeCase::small_g_variational;
    double ratio_Omega_omega = 0.0;
    double ratio_g_scale = 0.0;  // g / sqrt(omega*Omega); 0 when Omega = 0
    std::string advisory;
};

// Deterministic classification. The crossover scale is sqrt(omega*Omega); the
// cutoff factors 0.5 and 2 around it are policy, not a sharp boundary.
inline RegimeDiagnostic classify_regime(const ModelParams& p) {
    RegimeDiagnostic d;
    d.ratio_Omega_omega = p.Omega / p.omega;
    const double scale = std::sqrt(p.omega * std::max(p.Omega, 0.0));
    d.ratio_g_scale = (scale > 0.0) ? p.g / scale : 0.0;
    if (d.ratio_Omega_omega <= 1.0) {
        d.case_label = RegimeCase::small_g_variational;
        d.advisory = "Omega/omega <= 1: the optimized single coherent state is reliable here";
    } else if (p.g >= 2.0 * scale) {
        d.case_label = RegimeCase::large_g_displaced;
        d.advisory = "displaced-oscillator regime: lambda is close to g/omega and GRWA is already adequate";
    } else if (p.g <= 0.5 * scale) {
        d.case_label = RegimeCase::small_g_variational;
        d.advisory = "small-coupling regime: the optimized single coherent state is reliable here";
    } else {
        d.case_label = RegimeCase::intermediate_unreliable;
        d.advisory = "g ~ sqrt(omega*Omega): a single coherent state cannot represent the ground state; treat results as qualitative";
    }
    return d;
}

}  // namespace rabivar
