#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tribell/inequalities.hpp"

namespace tribell {

enum class Objective { AbsM, AbsMPrime, AbsSv };

// Families of measurement settings searched by the optimizer.
//   XyPlanar:    6 azimuths (A, B, C, A', B', C'), directions in the x-y plane
//   XzPlanar:    6 polar angles, directions in the x-z plane
//   XzSymmetric: 2 angles; theta shared by A,B,C and theta' by A',B',C'
//   Full:        12 angles, (polar, azimuth) per direction in the order
//                A, B, C, A', B', C'
enum class ParamKind { XyPlanar, XzPlanar, XzSymmetric, Full };

struct Parameterization {
    ParamKind kind = ParamKind::XyPlanar;

    int dimension() const;
    SettingsHextet settings(std::span<const double> angles) const;
};

// |M|, |M'| or |S_V| of the octet the state produces at these parameters.
double objective_value(const TripartiteState& state, Objective objective,
                       const Parameterization& param, std::span<const double> angles);

struct OptimizationResult {
    double best_value = 0.0;
    std::vector<double> best_angles; // reduced mod 2*pi
    SettingsHextet best_settings;
    InequalityReport report;
    int restarts_used = 0;
    bool converged = false; // winning restart's simplex diameter fell below 1e-10
};

// Multi-start Nelder-Mead maximization of the objective. Starting points are
// drawn uniformly from [0, 2*pi)^dim with a SplitMix64 stream seeded by
// `seed`; all of them are drawn up front, so the best value is nondecreasing
// in `restarts` for a fixed seed and the merge is order-independent
// (maximum value, ties to the lowest restart index).
OptimizationResult optimize(const TripartiteState& state, Objective objective,
                            const Parameterization& param, int restarts = 64,
                            std::uint64_t seed = 0);

// Central-difference gradient of the objective at `angles` with step `step`.
std::vector<double> objective_gradient(const TripartiteState& state, Objective objective,
                                       const Parameterization& param,
                                       std::span<const double> angles, double step);

// Per-component |gradient(step 1e-4) - gradient(step 1e-5)|: an O(step^2)
// consistency residual of the two central-difference estimates. Throws
// NonSmoothPointError when |objective| <= 1e-6 (the absolute value kinks).
std::vector<double> finite_difference_discrepancies(const TripartiteState& state,
                                                    Objective objective,
                                                    const Parameterization& param,
                                                    std::span<const double> angles);

// Maximum entry of finite_difference_discrepancies.
double finite_difference_check(const TripartiteState& state, Objective objective,
                               const Parameterization& param, std::span<const double> angles);

} // namespace tribell
