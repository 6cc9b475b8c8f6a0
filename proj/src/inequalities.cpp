#include "tribell/inequalities.hpp"

#include <cmath>

namespace tribell {

CorrelationOctet octet_from_settings(const TripartiteState& state,
                                     const SettingsHextet& settings) {
    const BlochDirection* first[2] = {&settings.a, &settings.a_prime};
    const BlochDirection* second[2] = {&settings.b, &settings.b_prime};
    const BlochDirection* third[2] = {&settings.c, &settings.c_prime};
    CorrelationOctet octet;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                octet[CorrelationOctet::index(x, y, z)] =
                    correlator(state, *first[x], *second[y], *third[z]);
    return octet;
}

double mermin_m(const CorrelationOctet& o) { return o[1] + o[2] + o[4] - o[7]; }

double mermin_m_prime(const CorrelationOctet& o) { return o[0] - o[3] - o[5] - o[6]; }

double svetlichny(const CorrelationOctet& o) {
    return o[0] + o[1] + o[2] + o[4] - o[7] - o[6] - o[5] - o[3];
}

InequalityReport classify(const CorrelationOctet& octet) {
    InequalityReport r;
    r.m = mermin_m(octet);
    r.m_prime = mermin_m_prime(octet);
    r.s_v = svetlichny(octet);
    const double mermin_max = std::max(std::abs(r.m), std::abs(r.m_prime));
    const double sv_abs = std::abs(r.s_v);
    const bool beyond_hybrid = sv_abs > kHybridBound + kViolationTolerance;
    r.violates_lhv = mermin_max > kLhvBound + kViolationTolerance || beyond_hybrid;
    r.proves_tripartite_entanglement =
        mermin_max > kEntanglementBound + kViolationTolerance || beyond_hybrid;
    r.proves_tripartite_nonlocality = beyond_hybrid;
    return r;
}

} // namespace tribell
