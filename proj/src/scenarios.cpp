#include "tribell/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tribell {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double deg = pi / 180.0;

SettingsHextet planar_xy(double p1, double p2, double p3, double prime_offset) {
    return {xy(p1), xy(p1 + prime_offset), xy(p2), xy(p2 + prime_offset),
            xy(p3), xy(p3 + prime_offset)};
}

SettingsHextet symmetric_xz(double theta, double theta_prime) {
    return {xz(theta), xz(theta_prime), xz(theta), xz(theta_prime), xz(theta), xz(theta_prime)};
}

std::vector<Scenario> build() {
    const double exact = 1e-9;
    const double sqrt2 = std::sqrt(2.0);
    std::vector<Scenario> s;

    s.push_back({"S1", "GHZ, azimuth sum 0, primes +90 deg", false,
                 planar_xy(0.0, 0.0, 0.0, pi / 2),
                 {{"M_PRIME", 4.0, exact}, {"M", 0.0, exact}, {"S_V", 4.0, exact}}});

    s.push_back({"S2", "GHZ, azimuth sum 90 deg, primes +90 deg", false,
                 planar_xy(pi / 6, pi / 6, pi / 6, pi / 2),
                 {{"M", 4.0, exact}, {"M_PRIME", 0.0, exact}, {"S_V", 4.0, exact}}});

    s.push_back({"S3", "GHZ, azimuth sum 30 deg, primes +90 deg", false,
                 planar_xy(pi / 18, pi / 18, pi / 18, pi / 2),
                 {{"M_PRIME", 3.46, 5e-3}, {"S_V", 1.46, 5e-3}}});

    Scenario s4{"S4", "GHZ, azimuth sum 135 deg, primes +90 deg (Svetlichny maximum)", false,
                planar_xy(pi / 4, pi / 4, pi / 4, pi / 2),
                {{"M", 2.0 * sqrt2, exact}, {"M_PRIME", 2.0 * sqrt2, exact},
                 {"S_V", 4.0 * sqrt2, exact}}};
    s4.run_optimizer = true;
    s4.opt_objective = Objective::AbsSv;
    s4.opt_param = ParamKind::XyPlanar;
    s4.opt_expected = 4.0 * sqrt2;
    s4.opt_tolerance = 1e-6;
    s.push_back(s4);

    s.push_back({"S5", "W, polar 0, primes +90 deg", true, symmetric_xz(0.0, pi / 2),
                 {{"M_PRIME", 3.0, exact}, {"M", 0.0, exact}, {"S_V", 3.0, exact}}});

    s.push_back({"S6", "W, polar 30 deg, primes +90 deg", true, symmetric_xz(pi / 6, pi / 6 + pi / 2),
                 {{"M", 3.0, exact}, {"M_PRIME", 0.0, exact}, {"S_V", 3.0, exact}}});

    Scenario s7{"S7", "W, polar 54.032 deg / 156.106 deg (Mermin maximum)", true,
                symmetric_xz(54.032 * deg, 156.106 * deg),
                {{"M_PRIME", 3.046, 5e-4}, {"M", 0.054, 5e-4}, {"S_V", 3.1, 5e-2}}};
    s7.run_optimizer = true;
    s7.opt_objective = Objective::AbsMPrime;
    s7.opt_param = ParamKind::XzSymmetric;
    s7.opt_expected = 3.046;
    s7.opt_tolerance = 5e-3;
    s.push_back(s7);

    Scenario s8{"S8", "W, polar 35.264 deg / 144.736 deg (Svetlichny maximum)", true,
                symmetric_xz(35.264 * deg, 144.736 * deg),
                {{"S_V", 4.354, 5e-3}, {"M", 2.177, 5e-3}, {"M_PRIME", 2.177, 5e-3}}};
    s8.run_optimizer = true;
    s8.opt_objective = Objective::AbsSv;
    s8.opt_param = ParamKind::XzSymmetric;
    s8.opt_expected = 4.354;
    s8.opt_tolerance = 5e-3;
    s.push_back(s8);

    return s;
}

} // namespace

const std::vector<Scenario>& all_scenarios() {
    static const std::vector<Scenario> scenarios = build();
    return scenarios;
}

double scenario_value(const Scenario& scenario, const std::string& quantity) {
    const TripartiteState state = scenario.w_state ? w() : ghz();
    const CorrelationOctet octet = octet_from_settings(state, scenario.settings);
    if (quantity == "M") return std::abs(mermin_m(octet));
    if (quantity == "M_PRIME") return std::abs(mermin_m_prime(octet));
    if (quantity == "S_V") return std::abs(svetlichny(octet));
    throw std::invalid_argument("scenario_value: unknown quantity " + quantity);
}

} // namespace tribell
