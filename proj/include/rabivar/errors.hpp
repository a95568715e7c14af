// errors.hpp — error types carrying solver diagnostics

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rabivar {

// Thrown when the 1-D minimizer cannot push |dE/dlambda| below tolerance.
// Carries the best iterate seen so far instead of returning a partial result.
class MinimizationError : public std::runtime_error {
public:
    MinimizationError(const std::string& what, double best_lambda, double best_energy,
                      double gradient_residual)
        : std::runtime_error(what),
          best_lambda_(best_lambda),
          best_energy_(best_energy),
          gradient_residual_(gradient_residual) {}

    double best_lambda() const noexcept { return best_lambda_; }
    double best_energy() const noexcept { return best_energy_; }
    double gradient_residual() const noexcept { return gradient_residual_; }

private:
    double best_lambda_;
    double best_energy_;
    double gradient_residual_;
};

// Thrown when the adaptive Fock truncation reaches its hard cap without the
// ground energy settling. history holds every (cutoff, energy) pair tried.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, std::vector<std::pair<int, double>> history)
        : std::runtime_error(what), history_(std::move(history)) {}

    const std::vector<std::pair<int, double>>& history() const noexcept { return history_; }

private:
    std::vector<std::pair<int, double>> history_;
};

}  // namespace rabivar
