// special_functions.hpp — associated Laguerre polynomials and the
// displaced-oscillator matrix-element function F_m(n; mu)

#pragma once

#include <cmath>
#include <stdexcept>

namespace rabivar {

// Hard cap on the recurrence length; larger requests are refused instead of
// silently losing accuracy.
inline constexpr int kMaxLaguerreIndex = 1'000'000;

// Associated Laguerre polynomial L_n^m(x), three-term recurrence in n.
// The explicit factorial sum alternates in sign and cancels catastrophically
// already for moderate n; the recurrence is stable for the arguments used here.
inline double laguerre(int n, int m, double x) {
    if (n < 0 || m < 0) {
        throw std::domain_error("laguerre: indices must be non-negative");
    }
    if (n > kMaxLaguerreIndex || m > kMaxLaguerreIndex) {
        throw std::domain_error("laguerre: index above supported cap");
    }
    if (!std::isfinite(x)) {
        throw std::domain_error("laguerre: x must be finite");
    }
    if (n == 0) return 1.0;
    double prev = 1.0;            // L_0^m
    double cur = 1.0 + m - x;     // L_1^m
    for (int k = 2; k <= n; ++k) {
        const double next = ((2.0 * k - 1.0 + m - x) * cur - (k - 1.0 + m) * prev) / k;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Arguments of F_m(n; mu).
struct FmParams {
    int m = 0;        // order (Fock-index offset)
    int n = 0;        // Fock index
    double mu = 0.0;  // displacement argument
};

// F_m(n; mu) = e^{-mu^2/2} mu^m [n!/(n+m)!] L_n^m(mu^2).
//
// With D(mu) = exp(mu (a† - a)) this equals sqrt(n!/(n+m)!) <n+m|D(mu)|n>,
// so |F_m| <= 1 always. The factorial ratio is folded into the mu^m power one
// factor at a time (mu/(n+1) * mu/(n+2) * ...) so neither piece overflows.
inline double displacement_element(const FmParams& p) {
    if (p.n < 0 || p.m < 0) {
        throw std::domain_error("displacement_element: indices must be non-negative");
    }
    if (p.n > kMaxLaguerreIndex || p.m > kMaxLaguerreIndex) {
        throw std::domain_error("displacement_element: index above supported cap");
    }
    if (!std::isfinite(p.mu)) {
        throw std::domain_error("displacement_element: mu must be finite");
    }
    double scale = std::exp(-0.5 * p.mu * p.mu);
    for (int i = 1; i <= p.m; ++i) {
        scale *= p.mu / (p.n + i);
    }
    if (scale == 0.0) return 0.0;
    return scale * laguerre(p.n, p.m, p.mu * p.mu);
}

inline double displacement_element(int n, int m, double mu) {
    return displacement_element(FmParams{.m = m, .n = n, .mu = mu});
}

}  // namespace rabivar
