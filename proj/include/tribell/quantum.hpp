#pragma once

#include <array>
#include <complex>
#include <span>

namespace tribell {

using cdouble = std::complex<double>;

// Unit vector on the Bloch sphere. Defines the spin observable
// sigma(n) = n_x X + n_y Y + n_z Z with eigenvalues +1/-1.
struct BlochDirection {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    double dot(const BlochDirection& o) const { return x * o.x + y * o.y + z * o.z; }
};

// n = (sin(polar) cos(azimuth), sin(polar) sin(azimuth), cos(polar)).
// Angles are unrestricted and wrap naturally.
BlochDirection direction(double polar, double azimuth);

// Direction in the x-y plane at the given azimuth: (cos phi, sin phi, 0).
BlochDirection xy(double azimuth);

// Direction in the x-z plane at the given polar angle: (sin theta, 0, cos theta).
BlochDirection xz(double polar);

// sigma(n) as a 2x2 matrix in the (up, down) basis, row-major.
std::array<std::array<cdouble, 2>, 2> spin_operator(const BlochDirection& n);

// Pure state of three spin-1/2 particles. Amplitudes are indexed by the
// basis bit string (b1 b2 b3), particle 1 the most significant bit,
// bit 0 = up and bit 1 = down along z. Always unit-normalized.
struct TripartiteState {
    std::array<cdouble, 8> amp{};
};

// Pure state of two spin-1/2 particles, same bit conventions.
struct BipartiteState {
    std::array<cdouble, 4> amp{};
};

// Normalizes the given amplitudes. Throws ZeroVectorError if every
// amplitude is below 1e-15 in magnitude.
TripartiteState make_state(std::span<const cdouble, 8> amplitudes);
TripartiteState make_state(const std::array<cdouble, 8>& amplitudes);
BipartiteState make_bipartite(const std::array<cdouble, 4>& amplitudes);

// (|up up up> + |down down down>)/sqrt(2)
TripartiteState ghz();

// (|up up down> + |up down up> + |down up up>)/sqrt(3)
TripartiteState w();

// <psi| sigma(d1) (x) sigma(d2) (x) sigma(d3) |psi> as a complex number.
// The operator is Hermitian, so the imaginary part is numerical residue.
cdouble product_expectation(const TripartiteState& state, const BlochDirection& d1,
                            const BlochDirection& d2, const BlochDirection& d3);

// Full correlator E = real part of product_expectation; lies in [-1, 1].
double correlator(const TripartiteState& state, const BlochDirection& d1,
                  const BlochDirection& d2, const BlochDirection& d3);

// GHZ correlator for three x-y plane measurements: cos(phi1 + phi2 + phi3).
double ghz_correlator_xy(double phi1, double phi2, double phi3);

// W correlator for three x-z plane measurements:
// -(2/3) cos(t1 + t2 + t3) - (1/3) cos t1 cos t2 cos t3.
double w_correlator_xz(double theta1, double theta2, double theta3);

struct ProjectionResult {
    double probability = 0.0;
    BipartiteState residual; // the two unmeasured particles, ascending index order
};

// Projects `particle` (1..3) onto the outcome (+1 or -1) of sigma(d).
// probability = <psi| Pi |psi> with Pi = (I + outcome * sigma(d))/2 at the
// particle's slot. Throws OutcomeImpossibleError when probability < 1e-12.
ProjectionResult project_particle(const TripartiteState& state, int particle,
                                  const BlochDirection& d, int outcome);

// Pure-state concurrence 2|ad - bc|: 0 for products, 1 for maximally entangled.
double concurrence(const BipartiteState& state);

} // namespace tribell
