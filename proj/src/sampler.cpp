#include "tribell/sampler.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "tribell/rng.hpp"

namespace tribell {

namespace {

// Eigenvector of sigma(n) for the outcome encoded by `bit` (0 -> +1, 1 -> -1),
// from the larger projector column.
std::array<cdouble, 2> outcome_vector(const BlochDirection& n, int bit) {
    const double s = bit == 0 ? 1.0 : -1.0;
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

std::array<double, 8> outcome_distribution(const TripartiteState& state,
                                           const BlochDirection& d1, const BlochDirection& d2,
                                           const BlochDirection& d3) {
    std::array<std::array<cdouble, 2>, 2> basis1 = {outcome_vector(d1, 0), outcome_vector(d1, 1)};
    std::array<std::array<cdouble, 2>, 2> basis2 = {outcome_vector(d2, 0), outcome_vector(d2, 1)};
    std::array<std::array<cdouble, 2>, 2> basis3 = {outcome_vector(d3, 0), outcome_vector(d3, 1)};

    std::array<double, 8> p{};
    double total = 0.0;
    for (int o = 0; o < 8; ++o) {
        const auto& e1 = basis1[(o >> 2) & 1];
        const auto& e2 = basis2[(o >> 1) & 1];
        const auto& e3 = basis3[o & 1];
        cdouble amplitude = 0.0;
        for (int b = 0; b < 8; ++b) {
            amplitude += std::conj(e1[(b >> 2) & 1] * e2[(b >> 1) & 1] * e3[b & 1]) * state.amp[b];
        }
        p[o] = std::norm(amplitude);
        total += p[o];
    }
    // Floating-point dust guard: clamp tiny negatives, renormalize exactly.
    for (double& q : p) q = (q < 0.0 && q >= -1e-15) ? 0.0 : q;
    for (double& q : p) q /= total;
    return p;
}

std::array<ShotEstimate, 8> sample_octet(const TripartiteState& state,
                                         const SettingsHextet& settings,
                                         long long shots_per_setting, std::uint64_t seed) {
    if (shots_per_setting < 1)
        throw std::invalid_argument("sample_octet: shots_per_setting must be >= 1");

    const BlochDirection* first[2] = {&settings.a, &settings.a_prime};
    const BlochDirection* second[2] = {&settings.b, &settings.b_prime};
    const BlochDirection* third[2] = {&settings.c, &settings.c_prime};

    SplitMix64 parent(seed);
    std::array<std::uint64_t, 8> stream_seed{};
    for (std::uint64_t& s : stream_seed) s = parent.next();

    std::array<ShotEstimate, 8> estimates{};
    for (int setting = 0; setting < 8; ++setting) {
        const int x = (setting >> 2) & 1, y = (setting >> 1) & 1, z = setting & 1;
        const std::array<double, 8> p =
            outcome_distribution(state, *first[x], *second[y], *third[z]);
        std::array<double, 8> cdf{};
        double acc = 0.0;
        for (int o = 0; o < 8; ++o) cdf[o] = (acc += p[o]);

        SplitMix64 stream(stream_seed[setting]);
        long long product_sum = 0;
        for (long long shot = 0; shot < shots_per_setting; ++shot) {
            const double u = stream.uniform();
            int outcome = 7;
            for (int o = 0; o < 8; ++o) {
                if (u < cdf[o]) {
                    outcome = o;
                    break;
                }
            }
            // product of the three +1/-1 outcomes: parity of the set bits
            product_sum += (std::popcount(static_cast<unsigned>(outcome)) & 1) ? -1 : 1;
        }

        ShotEstimate& est = estimates[setting];
        est.shots = shots_per_setting;
        est.seed = stream_seed[setting];
        est.mean = static_cast<double>(product_sum) / static_cast<double>(shots_per_setting);
        est.std_error =
            std::sqrt(std::max(0.0, 1.0 - est.mean * est.mean) /
                      static_cast<double>(shots_per_setting));
    }
    return estimates;
}

CorrelationOctet estimated_octet(const std::array<ShotEstimate, 8>& estimates) {
    CorrelationOctet octet;
    for (int i = 0; i < 8; ++i) octet[i] = estimates[i].mean;
    return octet;
}

} // namespace tribell
