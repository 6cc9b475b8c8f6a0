#pragma once

#include <cmath>
#include <numbers>

#include "tribell/inequalities.hpp"
#include "tribell/quantum.hpp"
#include "tribell/rng.hpp"

// Deterministic random inputs for property tests. Built on SplitMix64 so
// every platform draws the same sequences.
namespace testutil {

inline double gaussian(tribell::SplitMix64& rng) {
    const double u1 = 1.0 - rng.uniform(); // (0, 1]
    const double u2 = rng.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline tribell::TripartiteState random_state(tribell::SplitMix64& rng) {
    std::array<tribell::cdouble, 8> amp;
    for (auto& a : amp) a = tribell::cdouble(gaussian(rng), gaussian(rng));
    return tribell::make_state(amp);
}

inline tribell::BlochDirection random_direction(tribell::SplitMix64& rng) {
    const double z = 2.0 * rng.uniform() - 1.0;
    const double phi = rng.uniform(2.0 * std::numbers::pi);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

inline tribell::SettingsHextet random_hextet(tribell::SplitMix64& rng) {
    return {random_direction(rng), random_direction(rng), random_direction(rng),
            random_direction(rng), random_direction(rng), random_direction(rng)};
}

inline tribell::CorrelationOctet random_octet(tribell::SplitMix64& rng) {
    tribell::CorrelationOctet octet;
    for (int i = 0; i < 8; ++i) octet[i] = 2.0 * rng.uniform() - 1.0;
    return octet;
}

} // namespace testutil
