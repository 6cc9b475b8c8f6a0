#include "tribell/quantum.hpp"

#include <cmath>

#include "tribell/errors.hpp"

namespace tribell {

namespace {

constexpr double kZeroAmplitude = 1e-15;
constexpr double kImpossibleOutcome = 1e-12;

// Bit position of a 1-indexed particle in the 3-bit basis index.
int bit_of(int particle) { return 3 - particle; }

// Eigenvector of sigma(n) with eigenvalue `outcome`. Taken from the larger
// column of the projector (I + outcome*sigma(n))/2 for numerical stability
// near the poles.
std::array<cdouble, 2> eigenvector(const BlochDirection& n, int outcome) {
    const double s = static_cast<double>(outcome);
    const double pz = s * n.z;
    std::array<cdouble, 2> v{};
    if (pz >= 0.0) {
        v = {cdouble(1.0 + pz, 0.0), s * cdouble(n.x, n.y)};
    } else {
        v = {s * cdouble(n.x, -n.y), cdouble(1.0 - pz, 0.0)};
    }
    const double norm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    v[0] /= norm;
    v[1] /= norm;
    return v;
}

} // namespace

BlochDirection direction(double polar, double azimuth) {
    return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
            std::cos(polar)};
}

BlochDirection xy(double azimuth) { return {std::cos(azimuth), std::sin(azimuth), 0.0}; }

BlochDirection xz(double polar) { return {std::sin(polar), 0.0, std::cos(polar)}; }

std::array<std::array<cdouble, 2>, 2> spin_operator(const BlochDirection& n) {
    return {{{cdouble(n.z, 0.0), cdouble(n.x, -n.y)},
             {cdouble(n.x, n.y), cdouble(-n.z, 0.0)}}};
}

TripartiteState make_state(std::span<const cdouble, 8> amplitudes) {
    bool all_zero = true;
    double norm2 = 0.0;
    for (const cdouble& a : amplitudes) {
        if (std::abs(a) >= kZeroAmplitude) all_zero = false;
        norm2 += std::norm(a);
    }
    if (all_zero) throw ZeroVectorError("make_state: all amplitudes are (numerically) zero");
    TripartiteState s;
    const double inv = 1.0 / std::sqrt(norm2);
    for (int i = 0; i < 8; ++i) s.amp[i] = amplitudes[i] * inv;
    return s;
}

TripartiteState make_state(const std::array<cdouble, 8>& amplitudes) {
    return make_state(std::span<const cdouble, 8>(amplitudes));
}

BipartiteState make_bipartite(const std::array<cdouble, 4>& amplitudes) {
    bool all_zero = true;
    double norm2 = 0.0;
    for (const cdouble& a : amplitudes) {
        if (std::abs(a) >= kZeroAmplitude) all_zero = false;
        norm2 += std::norm(a);
    }
    if (all_zero) throw ZeroVectorError("make_bipartite: all amplitudes are (numerically) zero");
    BipartiteState s;
    const double inv = 1.0 / std::sqrt(norm2);
    for (int i = 0; i < 4; ++i) s.amp[i] = amplitudes[i] * inv;
    return s;
}

TripartiteState ghz() {
    const double r = 1.0 / std::sqrt(2.0);
    TripartiteState s;
    s.amp[0b000] = r;
    s.amp[0b111] = r;
    return s;
}

TripartiteState w() {
    const double r = 1.0 / std::sqrt(3.0);
    TripartiteState s;
    s.amp[0b001] = r;
    s.amp[0b010] = r;
    s.amp[0b100] = r;
    return s;
}

namespace {

// Applies a single-particle 2x2 operator at the given particle slot.
void apply_single(std::array<cdouble, 8>& amp, const std::array<std::array<cdouble, 2>, 2>& op,
                  int particle) {
    const int step = 1 << bit_of(particle);
    for (int base = 0; base < 8; ++base) {
        if (base & step) continue;
        const cdouble a0 = amp[base];
        const cdouble a1 = amp[base | step];
        amp[base] = op[0][0] * a0 + op[0][1] * a1;
        amp[base | step] = op[1][0] * a0 + op[1][1] * a1;
    }
}

} // namespace

cdouble product_expectation(const TripartiteState& state, const BlochDirection& d1,
                            const BlochDirection& d2, const BlochDirection& d3) {
    std::array<cdouble, 8> v = state.amp;
    apply_single(v, spin_operator(d1), 1);
    apply_single(v, spin_operator(d2), 2);
    apply_single(v, spin_operator(d3), 3);
    cdouble acc = 0.0;
    for (int i = 0; i < 8; ++i) acc += std::conj(state.amp[i]) * v[i];
    return acc;
}

double correlator(const TripartiteState& state, const BlochDirection& d1,
                  const BlochDirection& d2, const BlochDirection& d3) {
    return product_expectation(state, d1, d2, d3).real();
}

double ghz_correlator_xy(double phi1, double phi2, double phi3) {
    return std::cos(phi1 + phi2 + phi3);
}

double w_correlator_xz(double theta1, double theta2, double theta3) {
    return -(2.0 / 3.0) * std::cos(theta1 + theta2 + theta3) -
           (1.0 / 3.0) * std::cos(theta1) * std::cos(theta2) * std::cos(theta3);
}

ProjectionResult project_particle(const TripartiteState& state, int particle,
                                  const BlochDirection& d, int outcome) {
    if (particle < 1 || particle > 3)
        throw std::out_of_range("project_particle: particle index must be 1..3");
    const std::array<cdouble, 2> e = eigenvector(d, outcome);

    // Contracting conj(e) into the measured slot gives the unnormalized
    // residual; its squared norm is the outcome probability.
    const int step = 1 << bit_of(particle);
    std::array<cdouble, 4> res{};
    int k = 0;
    for (int idx = 0; idx < 8; ++idx) {
        if (idx & step) continue; // enumerate indices with the measured bit = 0
        res[k] = std::conj(e[0]) * state.amp[idx] + std::conj(e[1]) * state.amp[idx | step];
        ++k;
    }
    double prob = 0.0;
    for (const cdouble& a : res) prob += std::norm(a);
    if (prob < kImpossibleOutcome)
        throw OutcomeImpossibleError("project_particle: outcome has zero probability");

    ProjectionResult out;
    out.probability = prob;
    const double inv = 1.0 / std::sqrt(prob);
    for (int i = 0; i < 4; ++i) out.residual.amp[i] = res[i] * inv;
    return out;
}

double concurrence(const BipartiteState& state) {
    return 2.0 * std::abs(state.amp[0] * state.amp[3] - state.amp[1] * state.amp[2]);
}

} // namespace tribell
