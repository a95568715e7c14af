#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "rabivar/json_io.hpp"
#include "rabivar/model.hpp"

using namespace rabivar;
using Catch::Matchers::WithinAbs;

TEST_CASE("parameter map between the two forms", "[model]") {
    const ModelParams r = to_rotated(BiasedParams(1.0, 0.25, 0.05, 0.2));
    CHECK(r.omega == 1.0);
    CHECK(r.Omega == 0.5);
    CHECK(r.epsilon == 0.1);
    CHECK(r.g == 0.2);

    const ModelParams zero = to_rotated(BiasedParams(1.0, 0.0, 0.0, 0.0));
    CHECK(zero.Omega == 0.0);
    CHECK(zero.epsilon == 0.0);

    const ModelParams neg = to_rotated(BiasedParams(2.0, 1.5, -0.3, 0.7));
    CHECK(neg.omega == 2.0);
    CHECK(neg.Omega == 3.0);
    CHECK(neg.epsilon == -0.6);

    const BiasedParams b = from_rotated(ModelParams(1.0, 0.5, 0.1, 0.2));
    CHECK(b.Delta == 0.25);
    CHECK(b.epsilon_prime == 0.05);
}

TEST_CASE("round trip is the identity", "[model]") {
    oracles::Rng rng(0x0c0ffee1ULL);
    for (int i = 0; i < 200; ++i) {
        const ModelParams p(rng.uniform(0.1, 3.0), rng.uniform(0.0, 6.0), rng.uniform(-3.0, 3.0),
                            rng.uniform(0.0, 2.0));
        const ModelParams q = to_rotated(from_rotated(p));
        CHECK(q.omega == p.omega);
        CHECK(q.Omega == p.Omega);
        CHECK(q.epsilon == p.epsilon);
        CHECK(q.g == p.g);
    }
}

TEST_CASE("construction invariants", "[model]") {
    CHECK_THROWS_AS(ModelParams(0.0, 1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(-1.0, 1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(std::nan(""), 1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(1.0, std::numeric_limits<double>::infinity(), 0.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(BiasedParams(0.0, 1.0, 0.0, 0.0), std::invalid_argument);
    // negative bias is a valid sector
    CHECK_NOTHROW(ModelParams(1.0, 0.5, -2.0, 0.3));
}

TEST_CASE("JSON field names and round trip", "[model]") {
    const ModelParams p(1.5, 0.5, -0.1, 0.2);
    const nlohmann::json j = p;
    CHECK(j.contains("omega"));
    CHECK(j.contains("Omega"));
    CHECK(j.contains("epsilon"));
    CHECK(j.contains("g"));
    CHECK(j.size() == 4);
    CHECK(j["omega"] == 1.5);
    CHECK(j["Omega"] == 0.5);

    const auto q = j.get<ModelParams>();
    CHECK(q.omega == p.omega);
    CHECK(q.Omega == p.Omega);
    CHECK(q.epsilon == p.epsilon);
    CHECK(q.g == p.g);

    CHECK_THROWS(nlohmann::json{{"omega", 1.0}}.get<ModelParams>());
    CHECK_THROWS_AS(
        nlohmann::json({{"omega", -1.0}, {"Omega", 1.0}, {"epsilon", 0.0}, {"g", 0.0}})
            .get<ModelParams>(),
        std::invalid_argument);
}

TEST_CASE("the spin rotation preserves the spectrum", "[model]") {
    // Assemble both forms independently and compare their low spectra.
    const BiasedParams b(1.0, 0.35, 0.07, 0.4);
    const ModelParams r = to_rotated(b);
    const int N = 40;
    const Eigen::MatrixXd hb =
        oracles::kron_biased(b.omega, b.Delta, b.epsilon_prime, b.g, N);
    const Eigen::MatrixXd hr = oracles::kron_rotated(r.omega, r.Omega, r.epsilon, r.g, N);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sb(hb);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sr(hr);
    for (int k = 0; k < 6; ++k) {
        CHECK_THAT(sb.eigenvalues()(k), WithinAbs(sr.eigenvalues()(k), 1e-12));
    }
}
