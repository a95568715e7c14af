// model.hpp — biased quantum Rabi model parameters in both standard forms
//
// Rotated form (used by every solver):
//   H = omega a†a - (Omega/2) sigma_x + (epsilon/2) sigma_z + g sigma_z (a† + a)
// Biased form (the lab-frame writing, related by a pi/2 spin rotation about y):
//   H_B = omega a†a + g sigma_x (a + a†) + Delta sigma_z + epsilon' sigma_x
// with epsilon' = epsilon/2 and Delta = Omega/2. The rotation is a similarity
// transform, so both forms share their spectrum.

#pragma once

#include <cmath>
#include <stdexcept>

namespace rabivar {

// Parameters of the rotated form. Plain value type, validated at construction.
struct ModelParams {
    double omega = 1.0;    // oscillator frequency, > 0
    double Omega = 0.0;    // two-level splitting
    double epsilon = 0.0;  // bias (either sign; epsilon -> -epsilon flips the spin sector)
    double g = 0.0;        // coupling strength

    ModelParams() = default;
    ModelParams(double omega_, double Omega_, double epsilon_, double g_)
        : omega(omega_), Omega(Omega_), epsilon(epsilon_), g(g_) {
        validate();
    }

    void validate() const {
        if (!std::isfinite(omega) || !std::isfinite(Omega) || !std::isfinite(epsilon) ||
            !std::isfinite(g)) {
            throw std::invalid_argument("ModelParams: all fields must be finite");
        }
        if (!(omega > 0.0)) {
            throw std::invalid_argument("ModelParams: omega must be > 0");
        }
    }
};

// Parameters of the biased (lab-frame) form.
struct BiasedParams {
    double omega = 1.0;          // oscillator frequency, > 0
    double Delta = 0.0;          // half-splitting of the two-level system
    double epsilon_prime = 0.0;  // bias along sigma_x
    double g = 0.0;              // coupling strength

    BiasedParams() = default;
    BiasedParams(double omega_, double Delta_, double epsilon_prime_, double g_)
        : omega(omega_), Delta(Delta_), epsilon_prime(epsilon_prime_), g(g_) {
        validate();
    }

    void validate() const {
        if (!std::isfinite(omega) || !std::isfinite(Delta) || !std::isfinite(epsilon_prime) ||
            !std::isfinite(g)) {
            throw std::invalid_argument("BiasedParams: all fields must be finite");
        }
        if (!(omega > 0.0)) {
            throw std::invalid_argument("BiasedParams: omega must be > 0");
        }
    }
};

// epsilon = 2 epsilon', Omega = 2 Delta
inline ModelParams to_rotated(const BiasedParams& p) {
    return ModelParams(p.omega, 2.0 * p.Delta, 2.0 * p.epsilon_prime, p.g);
}

// Exact inverse of to_rotated.
inline BiasedParams from_rotated(const ModelParams& p) {
    return BiasedParams(p.omega, 0.5 * p.Omega, 0.5 * p.epsilon, p.g);
}

// Ground-state expectation values shared by all solvers.
struct Observables {
    double mean_photon = 0.0;     // <a†a>
    double sz_correlation = 0.0;  // <sigma_z (a† + a)>
    double sigma_x = 0.0;         // <sigma_x>
};

}  // namespace rabivar
