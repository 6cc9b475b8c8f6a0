#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "tribell/errors.hpp"
#include "tribell/optimize.hpp"
#include "test_util.hpp"

using namespace tribell;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

double pair_dot(const SettingsHextet& s, int party) {
    switch (party) {
        case 1: return s.a.dot(s.a_prime);
        case 2: return s.b.dot(s.b_prime);
        default: return s.c.dot(s.c_prime);
    }
}
} // namespace

TEST_CASE("parameterization dimensions and wiring") {
    CHECK(Parameterization{ParamKind::XyPlanar}.dimension() == 6);
    CHECK(Parameterization{ParamKind::XzPlanar}.dimension() == 6);
    CHECK(Parameterization{ParamKind::XzSymmetric}.dimension() == 2);
    CHECK(Parameterization{ParamKind::Full}.dimension() == 12);

    const double angles[2] = {0.3, 1.9};
    const SettingsHextet s = Parameterization{ParamKind::XzSymmetric}.settings(angles);
    CHECK(s.a.x == Approx(std::sin(0.3)));
    CHECK(s.b.x == Approx(std::sin(0.3)));
    CHECK(s.c_prime.x == Approx(std::sin(1.9)));
}

TEST_CASE("GHZ Svetlichny maximum over x-y azimuths") {
    const OptimizationResult r =
        optimize(ghz(), Objective::AbsSv, {ParamKind::XyPlanar}, 64, 0);
    CHECK(r.best_value == Approx(4.0 * kSqrt2).epsilon(1e-6));
    CHECK(r.converged);
    CHECK(r.restarts_used == 64);
    CHECK(r.report.proves_tripartite_nonlocality);

    // optimum family: |cos(sum of azimuths)| = 1/sqrt2 and primes
    // perpendicular to their partners (per-party orthogonal directions)
    const double sum = r.best_angles[0] + r.best_angles[1] + r.best_angles[2];
    CHECK(std::abs(std::cos(sum)) == Approx(1.0 / kSqrt2).epsilon(1e-6));
    for (int party = 1; party <= 3; ++party)
        CHECK(std::abs(pair_dot(r.best_settings, party)) < 1e-4);

    // objective value at the reported settings matches best_value
    const double check = std::abs(svetlichny(octet_from_settings(ghz(), r.best_settings)));
    CHECK(check == Approx(r.best_value).epsilon(1e-9));
}

TEST_CASE("W state optima in the symmetric x-z family") {
    SUBCASE("Svetlichny maximum 4.354") {
        const OptimizationResult r =
            optimize(w(), Objective::AbsSv, {ParamKind::XzSymmetric}, 64, 0);
        CHECK(std::abs(r.best_value - 4.354) <= 5e-3);
        CHECK(std::abs(std::abs(r.report.m) - 2.177) <= 5e-3);
        CHECK(std::abs(std::abs(r.report.m_prime) - 2.177) <= 5e-3);
        CHECK(r.converged);
        // at the W optimum the two directions of a party are NOT orthogonal:
        // their dot product is 1/3 in magnitude (tetrahedral arrangement)
        for (int party = 1; party <= 3; ++party)
            CHECK(std::abs(pair_dot(r.best_settings, party)) == Approx(1.0 / 3.0).epsilon(1e-4));
    }
    SUBCASE("Mermin maximum 3.046") {
        const OptimizationResult r =
            optimize(w(), Objective::AbsMPrime, {ParamKind::XzSymmetric}, 64, 0);
        CHECK(std::abs(r.best_value - 3.046) <= 5e-3);
        CHECK(r.converged);
    }
    SUBCASE("six independent polars reach exactly the symmetric maximum") {
        // the symmetric family sits inside the 6-polar family, and the
        // unrestricted W maximum is the same 4.3546, so the sandwich is tight
        const OptimizationResult r =
            optimize(w(), Objective::AbsSv, {ParamKind::XzPlanar}, 64, 0);
        CHECK(std::abs(r.best_value - 4.354648) <= 5e-3);
    }
}

TEST_CASE("unrestricted 12-parameter optimization") {
    const OptimizationResult g = optimize(ghz(), Objective::AbsSv, {ParamKind::Full}, 64, 0);
    CHECK(std::abs(g.best_value - 4.0 * kSqrt2) <= 1e-6);
    for (int party = 1; party <= 3; ++party)
        CHECK(std::abs(pair_dot(g.best_settings, party)) < 1e-4);

    // the W maximum over all directions equals the symmetric x-z maximum,
    // and the optimal pairs stay tetrahedral (dot 1/3) even unrestricted
    const OptimizationResult wf = optimize(w(), Objective::AbsSv, {ParamKind::Full}, 64, 0);
    CHECK(std::abs(wf.best_value - 4.354648431) <= 1e-6);
    for (int party = 1; party <= 3; ++party)
        CHECK(std::abs(pair_dot(wf.best_settings, party)) == Approx(1.0 / 3.0).epsilon(1e-4));
}

TEST_CASE("optimizer never exceeds the quantum bounds") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 3; ++trial) {
        const TripartiteState state = testutil::random_state(rng);
        const OptimizationResult sv =
            optimize(state, Objective::AbsSv, {ParamKind::XzSymmetric}, 8, trial);
        CHECK(sv.best_value <= 4.0 * kSqrt2 + 1e-9);
        const OptimizationResult m =
            optimize(state, Objective::AbsM, {ParamKind::XzSymmetric}, 8, trial);
        CHECK(m.best_value <= 4.0 + 1e-9);
    }
}

TEST_CASE("best value is nondecreasing in the restart count for a fixed seed") {
    double previous = -1.0;
    for (int restarts : {1, 2, 4, 8, 16}) {
        const OptimizationResult r =
            optimize(w(), Objective::AbsSv, {ParamKind::XzSymmetric}, restarts, 123);
        CHECK(r.best_value >= previous - 1e-15);
        previous = r.best_value;
    }
}

TEST_CASE("optimize is deterministic for a fixed seed") {
    const OptimizationResult a = optimize(w(), Objective::AbsSv, {ParamKind::XzSymmetric}, 16, 9);
    const OptimizationResult b = optimize(w(), Objective::AbsSv, {ParamKind::XzSymmetric}, 16, 9);
    CHECK(a.best_value == b.best_value);
    for (std::size_t i = 0; i < a.best_angles.size(); ++i)
        CHECK(a.best_angles[i] == b.best_angles[i]);
}

TEST_CASE("finite differences: two step sizes agree at O(step^2)") {
    // GHZ Svetlichny optimum: azimuth sum 3*pi/4, primes +90 deg
    const double each = pi / 4;
    const std::vector<double> at_optimum = {each, each, each,
                                            each + pi / 2, each + pi / 2, each + pi / 2};
    const Parameterization param{ParamKind::XyPlanar};

    const double discrepancy = finite_difference_check(ghz(), Objective::AbsSv, param, at_optimum);
    CHECK(discrepancy < 1e-6);

    // stationarity at the optimum
    const std::vector<double> grad =
        objective_gradient(ghz(), Objective::AbsSv, param, at_optimum, 1e-5);
    for (double g : grad) CHECK(std::abs(g) < 1e-4);
}

TEST_CASE("components with no dependence have exactly-zero discrepancies") {
    // GHZ with all directions in the x-y plane, expressed in the full
    // parameterization: every polar component sits at pi/2 where the
    // correlators are symmetric, so central differences cancel exactly.
    std::vector<double> point(12, 0.0);
    const double azimuth[6] = {pi / 4, pi / 4, pi / 4, 3 * pi / 4, 3 * pi / 4, 3 * pi / 4};
    for (int d = 0; d < 6; ++d) {
        point[2 * d] = pi / 2;          // polar
        point[2 * d + 1] = azimuth[d];  // azimuth
    }
    const std::vector<double> discrepancies =
        finite_difference_discrepancies(ghz(), Objective::AbsSv, {ParamKind::Full}, point);
    for (int d = 0; d < 6; ++d) CHECK(discrepancies[2 * d] < 1e-10);
}

TEST_CASE("W Mermin optimum is stationary in the symmetric family") {
    const std::vector<double> at_optimum = {54.032 * pi / 180.0, 156.106 * pi / 180.0};
    const std::vector<double> grad =
        objective_gradient(w(), Objective::AbsMPrime, {ParamKind::XzSymmetric}, at_optimum, 1e-5);
    for (double g : grad) CHECK(std::abs(g) < 1e-4);
}

TEST_CASE("finite_difference_check refuses near-zero objectives") {
    // W in the x-y plane: every correlator vanishes, so |M| == 0
    const std::vector<double> point(6, 0.25);
    CHECK_THROWS_AS(finite_difference_check(w(), Objective::AbsM, {ParamKind::XyPlanar}, point),
                    NonSmoothPointError);
}
