// exact.hpp — numerically exact ground state by dense diagonalization in a
// truncated product basis
//
// Basis ordering is spin-major: index s*(N+1) + n with s = 0 for |-_z> and
// s = 1 for |+_z>, n = 0..N. All observable quadratic forms are written
// against this ordering.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rabivar/errors.hpp"
#include "rabivar/model.hpp"

namespace rabivar {

// Absolute cap on the assembled dimension (dense storage).
inline constexpr int kMaxFockCutoff = 4096;

// Probability allowed on the top 10% of Fock levels before a solve counts as
// converged.
inline constexpr double kTailMassTol = 1e-8;

struct TruncationPolicy {
    int n_start = 32;          // initial Fock cutoff
    int n_max = 2048;          // hard cap
    double growth = 2.0;       // cutoff multiplier between attempts
    double energy_tol = 1e-10; // |E(N_k) - E(N_{k-1})| threshold, units of omega

    void validate() const {
        if (n_start < 4) throw std::invalid_argument("TruncationPolicy: n_start must be >= 4");
        if (n_max < n_start) throw std::invalid_argument("TruncationPolicy: n_max must be >= n_start");
        if (n_max > kMaxFockCutoff) throw std::invalid_argument("TruncationPolicy: n_max above assembly cap");
        if (!(growth >= 1.5)) throw std::invalid_argument("TruncationPolicy: growth must be >= 1.5");
        if (!(energy_tol > 0.0)) throw std::invalid_argument("TruncationPolicy: energy_tol must be > 0");
    }
};

struct ExactSolution {
    double energy = 0.0;
    Eigen::VectorXd vector;  // ground state amplitudes, spin-major, dim 2(n_used+1)
    int n_used = 0;
    Observables observables;
    std::vector<std::pair<int, double>> convergence_history;  // (N, energy)
};

// H = omega a†a - (Omega/2) sigma_x + (epsilon/2) sigma_z + g sigma_z (a† + a)
// as a real symmetric matrix of dimension 2(N+1).
inline Eigen::MatrixXd assemble_hamiltonian(const ModelParams& p, int N) {
    if (N < 0) throw std::domain_error("assemble_hamiltonian: N must be >= 0");
    if (N > kMaxFockCutoff) throw std::length_error("assemble_hamiltonian: cutoff above assembly cap");
    const int levels = N + 1;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * levels, 2 * levels);
    for (int s = 0; s < 2; ++s) {
        const double sz = (s == 0) ? -1.0 : 1.0;
        const int base = s * levels;
        for (int n = 0; n <= N; ++n) {
            h(base + n, base + n) = p.omega * n + 0.5 * p.epsilon * sz;
            if (n < N) {
                const double c = p.g * sz * std::sqrt(n + 1.0);
                h(base + n, base + n + 1) = c;
                h(base + n + 1, base + n) = c;
            }
        }
    }
    for (int n = 0; n <= N; ++n) {
        h(n, levels + n) = -0.5 * p.Omega;
        h(levels + n, n) = -0.5 * p.Omega;
    }
    return h;
}

namespace detail {

inline double tail_mass(const Eigen::VectorXd& v, int N) {
    const int levels = N + 1;
    const int tail = std::max(1, levels / 10);
    double mass = 0.0;
    for (int n = levels - tail; n < levels; ++n) {
        mass += v[n] * v[n] + v[levels + n] * v[levels + n];
    }
    return mass;
}

inline Observables exact_observables(const Eigen::VectorXd& v, int N) {
    const int levels = N + 1;
    double nbar = 0.0;
    double corr = 0.0;
    double sx = 0.0;
    for (int n = 0; n <= N; ++n) {
        const double am = v[n];
        const double ap = v[levels + n];
        nbar += n * (am * am + ap * ap);
        sx += am * ap;
        if (n < N) {
            const double c = std::sqrt(n + 1.0);
            corr += c * (-am * v[n + 1] + ap * v[levels + n + 1]);
        }
    }
    Observables o;
    o.mean_photon = nbar;
    o.sz_correlation = 2.0 * corr;
    o.sigma_x = 2.0 * sx;
    return o;
}

}  // namespace detail

// Diagonalize with growing cutoff until the ground energy settles to
// energy_tol (in units of omega) and the tail mass is negligible. Throws
// TruncationError with the full history when n_max is reached unconverged.
inline ExactSolution ground_state(const ModelParams& p, const TruncationPolicy& policy = {}) {
    policy.validate();
    ExactSolution sol;
    int N = std::min(policy.n_start, policy.n_max);
    double prev_energy = 0.0;
    bool have_prev = false;
    for (;;) {
        const Eigen::MatrixXd h = assemble_hamiltonian(p, N);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("ground_state: eigensolver failed");
        }
        const double energy = solver.eigenvalues()(0);
        sol.convergence_history.emplace_back(N, energy);
        const Eigen::VectorXd v = solver.eigenvectors().col(0);
        const bool settled = have_prev && std::abs(energy - prev_energy) <= policy.energy_tol * p.omega;
        if (settled && detail::tail_mass(v, N) <= kTailMassTol) {
            sol.energy = energy;
            sol.vector = v;
            sol.n_used = N;
            sol.observables = detail::exact_observables(v, N);
            return sol;
        }
        if (N >= policy.n_max) {
            throw TruncationError("ground_state: energy not converged at the truncation cap",
                                  std::move(sol.convergence_history));
        }
        prev_energy = energy;
        have_prev = true;
        N = std::min(policy.n_max, static_cast<int>(std::ceil(N * policy.growth)));
    }
}

}  // namespace rabivar
