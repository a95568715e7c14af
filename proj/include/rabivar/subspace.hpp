// subspace.hpp — the 2x2 fixed-n blocks of the polaron-transformed effective
// Hamiltonian and their closed-form spectral decomposition
//
// After the displacement transform U = exp(lambda sigma_z (a† - a)), the
// n-conserving part of the Hamiltonian decouples into one 2x2 block per Fock
// level n, spanned by {|-_z> ⊗ D(lambda)|n>, |+_z> ⊗ D(-lambda)|n>}:
//
//     [ xi_minus   r_n     ]     xi_± = omega n ± epsilon/2 + omega lambda^2 - 2 g lambda
//     [ r_n        xi_plus ]     r_n  = -(Omega/2) F_0(n; 2 lambda)
//
// F_0 is evaluated at displacement argument 2*lambda because the spin-flip
// term carries cosh[2 lambda (a† - a)]. Component order is (|-_z>, |+_z>)
// everywhere in this library.

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rabivar/model.hpp"
#include "rabivar/special_functions.hpp"

namespace rabivar {

// Eigenvalue gaps below this (relative) threshold count as degenerate; the
// closed-form eigenvectors are 0/0 there and the basis vectors are returned.
inline constexpr double kDegenerateGapTol = 1e-14;

struct SubspaceMatrix {
    ModelParams params;
    int n = 0;
    double lambda = 0.0;
    double xi_minus = 0.0;
    double xi_plus = 0.0;
    double r_n = 0.0;
};

// Eigen-decomposition of a SubspaceMatrix. e_minus <= e_plus. The (alpha, beta)
// pairs are the (|-_z>, |+_z>) components of the normalized eigenvectors, with
// the overall sign fixed by beta >= 0 (alpha > 0 when beta vanishes). For
// r_n > 0 this reproduces the textbook closed forms with the minus sign on
// alpha of the lower branch.
struct SubspaceEigen {
    double e_minus = 0.0;
    double e_plus = 0.0;
    double alpha_minus = 0.0;
    double beta_minus = 0.0;
    double alpha_plus = 0.0;
    double beta_plus = 0.0;
};

inline SubspaceMatrix build_subspace(const ModelParams& p, int n, double lambda) {
    if (n < 0) throw std::domain_error("build_subspace: n must be non-negative");
    if (!std::isfinite(lambda)) throw std::domain_error("build_subspace: lambda must be finite");
    const double shift = p.omega * lambda * lambda - 2.0 * p.g * lambda;
    SubspaceMatrix m;
    m.params = p;
    m.n = n;
    m.lambda = lambda;
    m.xi_minus = p.omega * n - 0.5 * p.epsilon + shift;
    m.xi_plus = p.omega * n + 0.5 * p.epsilon + shift;
    m.r_n = -0.5 * p.Omega * displacement_element(n, 0, 2.0 * lambda);
    return m;
}

inline SubspaceEigen diagonalize_subspace(const SubspaceMatrix& m) {
    const double d = m.xi_minus - m.xi_plus;
    const double tr = m.xi_minus + m.xi_plus;
    const double gap = std::sqrt(d * d + 4.0 * m.r_n * m.r_n);

    SubspaceEigen out;
    out.e_minus = 0.5 * (tr - gap);
    out.e_plus = 0.5 * (tr + gap);

    const double scale = std::max({1.0, std::abs(m.xi_minus), std::abs(m.xi_plus)});
    if (gap <= kDegenerateGapTol * scale) {
        out.e_minus = out.e_plus = 0.5 * tr;
        out.alpha_minus = 1.0;
        out.beta_minus = 0.0;
        out.alpha_plus = 0.0;
        out.beta_plus = 1.0;
        return out;
    }
    if (m.r_n == 0.0) {
        // diagonal block: the spin sectors decouple exactly
        if (m.xi_minus <= m.xi_plus) {
            out.alpha_minus = 1.0;
            out.beta_plus = 1.0;
        } else {
            out.beta_minus = 1.0;
            out.alpha_plus = 1.0;
        }
        return out;
    }

    // Rotation angle of the block: cos(phi) = d/gap, sin(phi) = 2 r_n / gap.
    // phi/2 lies in (-pi/2, pi/2), so cos(phi/2) > 0 and the lower branch
    // (-sin, cos) already has beta >= 0; the upper branch needs a flip when
    // r_n < 0.
    const double phi = std::atan2(2.0 * m.r_n, d);
    const double c = std::cos(0.5 * phi);
    const double s = std::sin(0.5 * phi);
    out.alpha_minus = -s;
    out.beta_minus = c;
    if (s >= 0.0) {
        out.alpha_plus = c;
        out.beta_plus = s;
    } else {
        out.alpha_plus = -c;
        out.beta_plus = -s;
    }
    return out;
}

}  // namespace rabivar
