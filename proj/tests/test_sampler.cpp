#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <vector>

#include "tribell/errors.hpp"
#include "tribell/sampler.hpp"
#include "test_util.hpp"

using namespace tribell;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;

SettingsHextet all_z() {
    const BlochDirection z = direction(0, 0);
    return {z, z, z, z, z, z};
}

SettingsHextet ghz_sv_max_settings() {
    const double each = pi / 4;
    return {xy(each), xy(each + pi / 2), xy(each), xy(each + pi / 2),
            xy(each), xy(each + pi / 2)};
}
} // namespace

TEST_CASE("outcome_distribution worked examples") {
    SUBCASE("GHZ along z: only +++ and ---") {
        const BlochDirection z = direction(0, 0);
        const std::array<double, 8> p = outcome_distribution(ghz(), z, z, z);
        CHECK(p[0b000] == Approx(0.5).epsilon(1e-12));
        CHECK(p[0b111] == Approx(0.5).epsilon(1e-12));
        for (int o = 1; o < 7; ++o) CHECK(p[o] < 1e-14);
    }
    SUBCASE("W along z: one minus outcome, uniformly placed") {
        const BlochDirection z = direction(0, 0);
        const std::array<double, 8> p = outcome_distribution(w(), z, z, z);
        CHECK(p[0b001] == Approx(1.0 / 3).epsilon(1e-12));
        CHECK(p[0b010] == Approx(1.0 / 3).epsilon(1e-12));
        CHECK(p[0b100] == Approx(1.0 / 3).epsilon(1e-12));
        CHECK(p[0b000] < 1e-14);
        CHECK(p[0b111] < 1e-14);
    }
    SUBCASE("product mean from the distribution equals the correlator") {
        const std::array<double, 8> p = outcome_distribution(ghz(), xy(0), xy(0), xy(0));
        double mean = 0.0;
        for (int o = 0; o < 8; ++o)
            mean += ((std::popcount(static_cast<unsigned>(o)) & 1) ? -1.0 : 1.0) * p[o];
        CHECK(mean == Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("distributions are normalized and consistent for random inputs") {
    SplitMix64 rng(19);
    for (int trial = 0; trial < 1000; ++trial) {
        const TripartiteState state = testutil::random_state(rng);
        const BlochDirection d1 = testutil::random_direction(rng);
        const BlochDirection d2 = testutil::random_direction(rng);
        const BlochDirection d3 = testutil::random_direction(rng);
        const std::array<double, 8> p = outcome_distribution(state, d1, d2, d3);
        double total = 0.0, mean = 0.0;
        for (int o = 0; o < 8; ++o) {
            CHECK(p[o] >= -1e-15);
            total += p[o];
            mean += ((std::popcount(static_cast<unsigned>(o)) & 1) ? -1.0 : 1.0) * p[o];
        }
        CHECK(total == Approx(1.0).epsilon(1e-12));
        CHECK(mean == Approx(correlator(state, d1, d2, d3)).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("marginal over the third particle matches the projective description") {
    SplitMix64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const TripartiteState state = testutil::random_state(rng);
        const BlochDirection d1 = testutil::random_direction(rng);
        const BlochDirection d2 = testutil::random_direction(rng);
        const BlochDirection d3 = testutil::random_direction(rng);
        const std::array<double, 8> p = outcome_distribution(state, d1, d2, d3);

        // two-party distribution built from project_particle on particle 3:
        // P(a,b) = sum_s p_s * P_residual_s(a,b)
        std::array<double, 4> reduced{};
        for (int s : {+1, -1}) {
            ProjectionResult proj;
            try {
                proj = project_particle(state, 3, d3, s);
            } catch (const OutcomeImpossibleError&) {
                continue;
            }
            // residual is a two-qubit state of particles (1,2)
            TripartiteState embedded; // pad with particle 3 along +z for reuse
            const std::array<double, 8> rp = [&] {
                // compute two-party outcome probabilities of the residual by
                // embedding it as a 3-particle state with a spectator qubit
                std::array<cdouble, 8> amp{};
                for (int i = 0; i < 4; ++i) amp[i << 1] = proj.residual.amp[i];
                embedded.amp = amp;
                return outcome_distribution(embedded, d1, d2, direction(0, 0));
            }();
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    reduced[a * 2 + b] += proj.probability * rp[(a << 2) | (b << 1) | 0];
        }

        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                const double direct = p[(a << 2) | (b << 1) | 0] + p[(a << 2) | (b << 1) | 1];
                CHECK(direct == Approx(reduced[a * 2 + b]).epsilon(1e-12).scale(1.0));
            }
        }
    }
}

TEST_CASE("sampling worked examples") {
    SUBCASE("deterministic product at all-x GHZ settings: mean 1, no error bar") {
        const SettingsHextet all_x = {xy(0), xy(0), xy(0), xy(0), xy(0), xy(0)};
        const std::array<ShotEstimate, 8> est = sample_octet(ghz(), all_x, 500, 99);
        for (const ShotEstimate& e : est) {
            CHECK(e.mean == 1.0);
            CHECK(e.std_error == 0.0);
            CHECK(e.shots == 500);
        }
    }
    SUBCASE("GHZ along z: equal-weight +-1 products, mean near 0") {
        const std::array<ShotEstimate, 8> est = sample_octet(ghz(), all_z(), 100000, 99);
        // outcomes are +++ or ---, products +1/-1 with probability 1/2 each
        CHECK(std::abs(est[0].mean) < 5.0 * est[0].std_error);
        CHECK(est[0].std_error == Approx(std::sqrt((1 - est[0].mean * est[0].mean) / 1e5)));
    }
    SUBCASE("same seed, same estimates; different seed, different draws") {
        const auto a = sample_octet(ghz(), ghz_sv_max_settings(), 2000, 7);
        const auto b = sample_octet(ghz(), ghz_sv_max_settings(), 2000, 7);
        const auto c = sample_octet(ghz(), ghz_sv_max_settings(), 2000, 8);
        bool any_difference = false;
        for (int i = 0; i < 8; ++i) {
            CHECK(a[i].mean == b[i].mean);
            CHECK(a[i].seed == b[i].seed);
            any_difference = any_difference || a[i].mean != c[i].mean;
        }
        CHECK(any_difference);
    }
    SUBCASE("std_error is the plug-in formula") {
        const auto est = sample_octet(w(), all_z(), 1000, 5);
        for (const ShotEstimate& e : est) {
            CHECK(std::abs(e.mean) <= 1.0);
            CHECK(e.std_error ==
                  Approx(std::sqrt((1 - e.mean * e.mean) / 1000.0)).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("estimates concentrate around the exact octet") {
    const SettingsHextet settings = ghz_sv_max_settings();
    const CorrelationOctet exact = octet_from_settings(ghz(), settings);

    const auto est = sample_octet(ghz(), settings, 1000000, 2026);
    for (int i = 0; i < 8; ++i)
        CHECK(std::abs(est[i].mean - exact[i]) <= 4.0 * est[i].std_error);
    const double sv = svetlichny(estimated_octet(est));
    CHECK(std::abs(std::abs(sv) - 4.0 * std::sqrt(2.0)) < 0.02);
}

TEST_CASE("error decays like one over sqrt(shots)") {
    const SettingsHextet settings = ghz_sv_max_settings();
    const CorrelationOctet exact = octet_from_settings(ghz(), settings);

    // median absolute deviation across the 8 settings, per shot count
    std::vector<double> med;
    for (long long shots : {1000LL, 10000LL, 100000LL, 1000000LL}) {
        const auto est = sample_octet(ghz(), settings, shots, 4242);
        std::vector<double> devs;
        for (int i = 0; i < 8; ++i) devs.push_back(std::abs(est[i].mean - exact[i]));
        std::sort(devs.begin(), devs.end());
        med.push_back(0.5 * (devs[3] + devs[4]));
    }
    // expected scaling: each 100x in shots shrinks the deviation 10x;
    // allow a factor-3 band around the prediction anchored at 10^3 shots
    for (std::size_t k = 1; k < med.size(); ++k) {
        const double predicted = med[0] / std::pow(std::sqrt(10.0), static_cast<double>(k));
        CHECK(med[k] < 3.0 * predicted);
        CHECK(med[k] > predicted / 3.0);
    }
}
