// oracles.hpp — independent test-side oracles
//
// Nothing here shares a code path with the library functions it is used to
// check: Laguerre values come from the explicit factorial sum in extended
// precision, displacement elements from a truncated matrix exponential,
// Hamiltonians from Kronecker products, and eigenvalues from inertia-count
// bisection on the characteristic polynomial.

#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracles {

inline long double factorial(int k) {
    long double f = 1.0L;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// L_n^m(x) = sum_i (-x)^i (n+m)! / [(m+i)! (n-i)! i!], evaluated in long
// double. Only sane for small n where the alternating sum does not cancel.
inline long double laguerre_sum(int n, int m, long double x) {
    long double total = 0.0L;
    for (int i = 0; i <= n; ++i) {
        const long double coeff =
            factorial(n + m) / (factorial(m + i) * factorial(n - i) * factorial(i));
        total += std::pow(-x, i) * coeff;
    }
    return total;
}

// D(mu) = exp(mu (a† - a)) in a Fock basis truncated at dim levels.
inline Eigen::MatrixXd displacement_matrix(double mu, int dim) {
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) {
        const double c = mu * std::sqrt(n + 1.0);
        gen(n + 1, n) = c;
        gen(n, n + 1) = -c;
    }
    return gen.exp();
}

inline Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Spin basis order (|-_z>, |+_z>), matching the library's spin-major layout.
inline Eigen::MatrixXd pauli_z() {
    Eigen::MatrixXd s(2, 2);
    s << -1, 0, 0, 1;
    return s;
}

inline Eigen::MatrixXd pauli_x() {
    Eigen::MatrixXd s(2, 2);
    s << 0, 1, 1, 0;
    return s;
}

inline Eigen::MatrixXd number_op(int N) {
    Eigen::MatrixXd n = Eigen::MatrixXd::Zero(N + 1, N + 1);
    for (int k = 0; k <= N; ++k) n(k, k) = k;
    return n;
}

inline Eigen::MatrixXd position_op(int N) {  // a + a†
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(N + 1, N + 1);
    for (int k = 0; k < N; ++k) {
        const double c = std::sqrt(k + 1.0);
        x(k, k + 1) = c;
        x(k + 1, k) = c;
    }
    return x;
}

// Rotated-form Hamiltonian assembled purely from Kronecker products.
inline Eigen::MatrixXd kron_rotated(double omega, double Omega, double epsilon, double g, int N) {
    const Eigen::MatrixXd id2 = Eigen::MatrixXd::Identity(2, 2);
    const Eigen::MatrixXd idb = Eigen::MatrixXd::Identity(N + 1, N + 1);
    return omega * kron(id2, number_op(N)) - 0.5 * Omega * kron(pauli_x(), idb) +
           0.5 * epsilon * kron(pauli_z(), idb) + g * kron(pauli_z(), position_op(N));
}

// Biased (lab-frame) Hamiltonian.
inline Eigen::MatrixXd kron_biased(double omega, double Delta, double epsilon_prime, double g,
                                   int N) {
    const Eigen::MatrixXd id2 = Eigen::MatrixXd::Identity(2, 2);
    const Eigen::MatrixXd idb = Eigen::MatrixXd::Identity(N + 1, N + 1);
    return omega * kron(id2, number_op(N)) + g * kron(pauli_x(), position_op(N)) +
           Delta * kron(pauli_z(), idb) + epsilon_prime * kron(pauli_x(), idb);
}

// Number of eigenvalues of symmetric a strictly below x, by Sylvester inertia
// of a - x I under unpivoted symmetric elimination. Bisection midpoints are
// generic, so pivot breakdown is not a concern at test scale.
inline int count_eigs_below(Eigen::MatrixXd a, double x) {
    const Eigen::Index n = a.rows();
    for (Eigen::Index i = 0; i < n; ++i) a(i, i) -= x;
    int neg = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
        double piv = a(k, k);
        if (piv == 0.0) piv = -1e-300;
        if (piv < 0.0) ++neg;
        for (Eigen::Index i = k + 1; i < n; ++i) {
            const double f = a(i, k) / piv;
            for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return neg;
}

// All eigenvalues of a small symmetric matrix by inertia bisection between
// Gershgorin bounds.
inline std::vector<double> eigenvalues_bisect(const Eigen::MatrixXd& a, double tol = 1e-12) {
    const Eigen::Index n = a.rows();
    double lo = a(0, 0);
    double hi = a(0, 0);
    for (Eigen::Index i = 0; i < n; ++i) {
        double radius = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j != i) radius += std::abs(a(i, j));
        }
        lo = std::min(lo, a(i, i) - radius);
        hi = std::max(hi, a(i, i) + radius);
    }
    std::vector<double> evals(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        double a0 = lo;
        double b0 = hi;
        while (b0 - a0 > tol) {
            const double mid = 0.5 * (a0 + b0);
            if (count_eigs_below(a, mid) >= k + 1) {
                b0 = mid;
            } else {
                a0 = mid;
            }
        }
        evals[k] = 0.5 * (a0 + b0);
    }
    return evals;
}

// splitmix64 uniforms: portable and seed-stable.
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
    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(uniform(0.0, 1.0) * (hi - lo + 1));
    }
};

}  // namespace oracles
