#pragma once

#include <array>

#include "tribell/quantum.hpp"

namespace tribell {

// Thresholds on the inequality quantities.
inline constexpr double kLhvBound = 2.0;                         // |M| for local models
inline constexpr double kHybridBound = 4.0;                      // |S_V| for hybrid models
inline const double kEntanglementBound = 2.0 * std::sqrt(2.0);   // |M| above which the
                                                                 // state is genuinely
                                                                 // three-particle entangled
inline const double kQuantumBound = 4.0 * std::sqrt(2.0);        // quantum maximum of |S_V|
inline constexpr double kViolationTolerance = 1e-9;

// The two measurement choices of each party: A/A' on particle 1,
// B/B' on particle 2, C/C' on particle 3.
struct SettingsHextet {
    BlochDirection a, a_prime, b, b_prime, c, c_prime;
};

// The eight full correlators, indexed by setting bits (x y z): x = 0 picks A,
// x = 1 picks A' (likewise y for B, z for C). Canonical order is therefore
// E(ABC), E(ABC'), E(AB'C), E(AB'C'), E(A'BC), E(A'BC'), E(A'B'C), E(A'B'C').
struct CorrelationOctet {
    std::array<double, 8> e{};

    static constexpr int index(int x, int y, int z) { return (x << 2) | (y << 1) | z; }
    double& operator[](int i) { return e[i]; }
    double operator[](int i) const { return e[i]; }
};

// Evaluates all eight correlators of the state at the given settings.
CorrelationOctet octet_from_settings(const TripartiteState& state, const SettingsHextet& settings);

// M = E(ABC') + E(AB'C) + E(A'BC) - E(A'B'C');  |M| <= 2 for local models.
double mermin_m(const CorrelationOctet& octet);

// M' = E(ABC) - E(AB'C') - E(A'BC') - E(A'B'C);  the primed-renamed form of M.
double mermin_m_prime(const CorrelationOctet& octet);

// S_V = E(ABC)+E(ABC')+E(AB'C)+E(A'BC) - E(A'B'C')-E(A'B'C)-E(A'BC')-E(AB'C').
// Identically M + M'; |S_V| <= 4 for any hybrid local-nonlocal model.
double svetlichny(const CorrelationOctet& octet);

struct InequalityReport {
    double m = 0.0;
    double m_prime = 0.0;
    double s_v = 0.0;
    bool violates_lhv = false;
    bool proves_tripartite_entanglement = false;
    bool proves_tripartite_nonlocality = false;
};

// Evaluates M, M', S_V and classifies against the bounds:
//   violates_lhv                    max(|M|,|M'|) > 2  or |S_V| > 4
//   proves_tripartite_entanglement  max(|M|,|M'|) > 2*sqrt(2) or |S_V| > 4
//   proves_tripartite_nonlocality   |S_V| > 4
// each with a 1e-9 margin so floating-point noise never flags.
InequalityReport classify(const CorrelationOctet& octet);

} // namespace tribell
