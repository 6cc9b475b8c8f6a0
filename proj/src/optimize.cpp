#include "tribell/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "tribell/errors.hpp"
#include "tribell/rng.hpp"

namespace tribell {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSimplexDiameterTol = 1e-10;
constexpr int kMaxEvalsPerRestart = 60000;

double reduce_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

struct LocalOptimum {
    std::vector<double> point;
    double value = 0.0; // objective (maximized)
    bool converged = false;
};

// Nelder-Mead on f = -objective (minimization), standard coefficients:
// reflection 1, expansion 2, contraction 0.5, shrink 0.5. Stops when the
// simplex diameter (max distance to the best vertex) drops below tolerance.
LocalOptimum nelder_mead(const std::vector<double>& start,
                         const std::function<double(std::span<const double>)>& objective) {
    const std::size_t dim = start.size();
    const std::size_t m = dim + 1;

    std::vector<std::vector<double>> simplex(m, start);
    for (std::size_t i = 1; i < m; ++i) simplex[i][i - 1] += 0.5;
    std::vector<double> value(m);
    int evals = 0;
    auto eval = [&](std::span<const double> x) {
        ++evals;
        return -objective(x);
    };
    for (std::size_t i = 0; i < m; ++i) value[i] = eval(simplex[i]);

    std::vector<std::size_t> order(m);
    std::vector<double> centroid(dim), trial(dim), trial2(dim);
    bool converged = false;

    while (evals < kMaxEvalsPerRestart) {
        for (std::size_t i = 0; i < m; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
        const std::size_t best = order[0];
        const std::size_t worst = order[m - 1];
        const std::size_t second_worst = order[m - 2];

        double diameter = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                const double diff = simplex[i][k] - simplex[best][k];
                d2 += diff * diff;
            }
            diameter = std::max(diameter, std::sqrt(d2));
        }
        if (diameter < kSimplexDiameterTol) {
            converged = true;
            break;
        }

        for (std::size_t k = 0; k < dim; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                if (i != worst) s += simplex[i][k];
            centroid[k] = s / static_cast<double>(dim);
        }

        for (std::size_t k = 0; k < dim; ++k) trial[k] = 2.0 * centroid[k] - simplex[worst][k];
        const double f_reflect = eval(trial);

        if (f_reflect < value[best]) {
            for (std::size_t k = 0; k < dim; ++k)
                trial2[k] = centroid[k] + 2.0 * (trial[k] - centroid[k]);
            const double f_expand = eval(trial2);
            if (f_expand < f_reflect) {
                simplex[worst] = trial2;
                value[worst] = f_expand;
            } else {
                simplex[worst] = trial;
                value[worst] = f_reflect;
            }
            continue;
        }
        if (f_reflect < value[second_worst]) {
            simplex[worst] = trial;
            value[worst] = f_reflect;
            continue;
        }

        if (f_reflect < value[worst]) { // outside contraction
            for (std::size_t k = 0; k < dim; ++k)
                trial2[k] = centroid[k] + 0.5 * (trial[k] - centroid[k]);
            const double f_contract = eval(trial2);
            if (f_contract <= f_reflect) {
                simplex[worst] = trial2;
                value[worst] = f_contract;
                continue;
            }
        } else { // inside contraction
            for (std::size_t k = 0; k < dim; ++k)
                trial2[k] = centroid[k] - 0.5 * (centroid[k] - simplex[worst][k]);
            const double f_contract = eval(trial2);
            if (f_contract < value[worst]) {
                simplex[worst] = trial2;
                value[worst] = f_contract;
                continue;
            }
        }

        for (std::size_t i = 0; i < m; ++i) { // shrink toward the best vertex
            if (i == best) continue;
            for (std::size_t k = 0; k < dim; ++k)
                simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
            value[i] = eval(simplex[i]);
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < m; ++i)
        if (value[i] < value[best]) best = i;
    return {simplex[best], -value[best], converged};
}

} // namespace

int Parameterization::dimension() const {
    switch (kind) {
        case ParamKind::XyPlanar:
        case ParamKind::XzPlanar: return 6;
        case ParamKind::XzSymmetric: return 2;
        default: return 12; // Full
    }
}

SettingsHextet Parameterization::settings(std::span<const double> angles) const {
    SettingsHextet s;
    switch (kind) {
        case ParamKind::XyPlanar:
            s = {xy(angles[0]), xy(angles[3]), xy(angles[1]),
                 xy(angles[4]), xy(angles[2]), xy(angles[5])};
            break;
        case ParamKind::XzPlanar:
            s = {xz(angles[0]), xz(angles[3]), xz(angles[1]),
                 xz(angles[4]), xz(angles[2]), xz(angles[5])};
            break;
        case ParamKind::XzSymmetric:
            s = {xz(angles[0]), xz(angles[1]), xz(angles[0]),
                 xz(angles[1]), xz(angles[0]), xz(angles[1])};
            break;
        default: // Full: (polar, azimuth) per direction, order A, B, C, A', B', C'
            s = {direction(angles[0], angles[1]),  direction(angles[6], angles[7]),
                 direction(angles[2], angles[3]),  direction(angles[8], angles[9]),
                 direction(angles[4], angles[5]),  direction(angles[10], angles[11])};
            break;
    }
    return s;
}

double objective_value(const TripartiteState& state, Objective objective,
                       const Parameterization& param, std::span<const double> angles) {
    const CorrelationOctet octet = octet_from_settings(state, param.settings(angles));
    switch (objective) {
        case Objective::AbsM: return std::abs(mermin_m(octet));
        case Objective::AbsMPrime: return std::abs(mermin_m_prime(octet));
        default: return std::abs(svetlichny(octet));
    }
}

OptimizationResult optimize(const TripartiteState& state, Objective objective,
                            const Parameterization& param, int restarts, std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("optimize: restarts must be >= 1");
    const int dim = param.dimension();

    // All starting points are drawn before any restart runs, so restart k is
    // the same regardless of the total count or execution order.
    SplitMix64 rng(seed);
    std::vector<std::vector<double>> starts(static_cast<std::size_t>(restarts),
                                            std::vector<double>(dim));
    for (auto& start : starts)
        for (double& a : start) a = rng.uniform(kTwoPi);

    auto f = [&](std::span<const double> x) { return objective_value(state, objective, param, x); };

    int best_index = -1;
    LocalOptimum best;
    for (int k = 0; k < restarts; ++k) {
        LocalOptimum local = nelder_mead(starts[static_cast<std::size_t>(k)], f);
        if (best_index < 0 || local.value > best.value) {
            best = std::move(local);
            best_index = k;
        }
    }

    OptimizationResult result;
    result.best_value = best.value;
    result.best_angles = best.point;
    for (double& a : result.best_angles) a = reduce_angle(a);
    result.best_settings = param.settings(best.point);
    result.report = classify(octet_from_settings(state, result.best_settings));
    result.restarts_used = restarts;
    result.converged = best.converged;
    return result;
}

std::vector<double> objective_gradient(const TripartiteState& state, Objective objective,
                                       const Parameterization& param,
                                       std::span<const double> angles, double step) {
    std::vector<double> x(angles.begin(), angles.end());
    std::vector<double> grad(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double saved = x[i];
        x[i] = saved + step;
        const double forward = objective_value(state, objective, param, x);
        x[i] = saved - step;
        const double backward = objective_value(state, objective, param, x);
        x[i] = saved;
        grad[i] = (forward - backward) / (2.0 * step);
    }
    return grad;
}

std::vector<double> finite_difference_discrepancies(const TripartiteState& state,
                                                    Objective objective,
                                                    const Parameterization& param,
                                                    std::span<const double> angles) {
    if (objective_value(state, objective, param, angles) <= 1e-6)
        throw NonSmoothPointError(
            "finite_difference_check: |objective| <= 1e-6, absolute value is not smooth here");
    const std::vector<double> coarse = objective_gradient(state, objective, param, angles, 1e-4);
    const std::vector<double> fine = objective_gradient(state, objective, param, angles, 1e-5);
    std::vector<double> out(coarse.size());
    for (std::size_t i = 0; i < coarse.size(); ++i) out[i] = std::abs(coarse[i] - fine[i]);
    return out;
}

double finite_difference_check(const TripartiteState& state, Objective objective,
                               const Parameterization& param, std::span<const double> angles) {
    const std::vector<double> d = finite_difference_discrepancies(state, objective, param, angles);
    return *std::max_element(d.begin(), d.end());
}

} // namespace tribell
