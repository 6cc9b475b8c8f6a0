#pragma once

#include <array>
#include <cstdint>

#include "tribell/inequalities.hpp"

namespace tribell {

// Joint outcome probabilities P(a, b, c) for one setting triple, indexed by
// outcome bits (bit 2 = particle 1, ...), bit 0 meaning outcome +1 and
// bit 1 meaning outcome -1. Nonnegative, sums to 1.
std::array<double, 8> outcome_distribution(const TripartiteState& state,
                                           const BlochDirection& d1, const BlochDirection& d2,
                                           const BlochDirection& d3);

// Finite-shot estimate of one full correlator.
struct ShotEstimate {
    double mean = 0.0;
    double std_error = 0.0; // plug-in: sqrt((1 - mean^2)/shots)
    long long shots = 0;
    std::uint64_t seed = 0; // per-setting stream seed actually used
};

// Draws shots_per_setting independent outcome triples per setting combination
// (canonical octet order) and returns the empirical product means.
//
// Determinism: the run seed feeds a SplitMix64 parent stream whose first
// eight outputs seed one SplitMix64 stream per setting combination, in
// canonical order. Outcomes are drawn by inverse CDF over the 8-outcome
// distribution with cumulative sums in canonical outcome order. Identical
// seeds give identical results on every platform, and per-setting streams
// are independent, so settings may be sampled in any order or in parallel.
std::array<ShotEstimate, 8> sample_octet(const TripartiteState& state,
                                         const SettingsHextet& settings,
                                         long long shots_per_setting, std::uint64_t seed);

// The octet of empirical means, convenient for feeding the estimates back
// into the inequality evaluators.
CorrelationOctet estimated_octet(const std::array<ShotEstimate, 8>& estimates);

} // namespace tribell
