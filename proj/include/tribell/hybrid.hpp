#pragma once

#include <array>
#include <vector>

#include "tribell/inequalities.hpp"

namespace tribell {

// Ways of splitting the three particles into a (possibly nonlocal) pair and
// an isolated, locally-responding particle.
enum class Bipartition { Pair12 = 0, Pair13 = 1, Pair23 = 2 };

inline const std::vector<Bipartition>& all_bipartitions() {
    static const std::vector<Bipartition> all = {Bipartition::Pair12, Bipartition::Pair13,
                                                 Bipartition::Pair23};
    return all;
}

// Deterministic hybrid strategy: the hidden variable fixes a +1/-1 product
// outcome for each of the 4 joint settings of the pair, and a +1/-1 outcome
// for each of the 2 settings of the isolated particle. The resulting
// correlator octet has entries pair_sign * single_sign.
struct HybridVertex {
    Bipartition bipartition = Bipartition::Pair12;
    // Indexed by (setting of lower-numbered pair member << 1) | other setting.
    std::array<int, 4> pair_sign{};
    // Indexed by the isolated particle's setting.
    std::array<int, 2> single_sign{};
    CorrelationOctet octet;
};

// All distinct vertex octets for the requested bipartitions, in a fixed
// deterministic order. The global sign flip (s, t) -> (-s, -t) maps a
// strategy to the same octet; duplicates (exact +1/-1 equality) are removed,
// keeping the first representative encountered. 32 vertices per bipartition.
std::vector<HybridVertex> enumerate_vertices(const std::vector<Bipartition>& bipartitions);

// The paper-simple strategy AB = AB' = A'B = +1, A'B' = -1, C = +1, C' = -1
// on the 12|3 split: octet (+1,-1,+1,-1,+1,-1,-1,+1), M' = 4, M = 0, S_V = 4.
CorrelationOctet trivial_model_octet();

enum class Verdict { Inside, Outside };

// Proof object for a membership decision. Inside: convex weights over the
// vertex list reconstructing the octet. Outside: an affine separator with
// h . octet > offset >= h . v for every vertex v, h scaled to max-norm 1.
struct HybridCertificate {
    Verdict verdict = Verdict::Inside;
    std::vector<double> weights;        // per vertex, when Inside
    std::array<double, 8> separator{};  // h, when Outside
    double offset = 0.0;                // when Outside
};

// Decides whether the octet is a convex combination of deterministic hybrid
// strategies over the given bipartitions (default: all three). Exact linear
// feasibility via phase-1 simplex; throws NumericalFailureError only if the
// solver's pivot cap is exceeded.
HybridCertificate membership(const CorrelationOctet& octet,
                             const std::vector<Bipartition>& bipartitions = all_bipartitions(),
                             double tolerance = 1e-9);

// Recheck of a certificate against the octet and the vertex list it was
// issued for. Inside: weights >= -tolerance, sum to 1 within tolerance, and
// reconstruct the octet within tolerance. Outside: strict separation of the
// octet with all vertices on or below the hyperplane. False on any breach.
bool verify_certificate(const CorrelationOctet& octet, const HybridCertificate& certificate,
                        const std::vector<HybridVertex>& vertices, double tolerance = 1e-9);

} // namespace tribell
