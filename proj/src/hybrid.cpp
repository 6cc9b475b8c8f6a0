#include "tribell/hybrid.hpp"

#include <bitset>
#include <cmath>

#include "tribell/lp.hpp"

namespace tribell {

namespace {

// Pair product sign for setting bits (x, y, z) under a bipartition: the pair
// lookup uses the two settings of the paired particles (lower index first),
// the single lookup the remaining one.
int pair_index(Bipartition bp, int x, int y, int z) {
    switch (bp) {
        case Bipartition::Pair12: return (x << 1) | y;
        case Bipartition::Pair13: return (x << 1) | z;
        default: return (y << 1) | z; // Pair23
    }
}

int single_index(Bipartition bp, int x, int y, int z) {
    switch (bp) {
        case Bipartition::Pair12: return z;
        case Bipartition::Pair13: return y;
        default: return x; // Pair23
    }
}

CorrelationOctet vertex_octet(Bipartition bp, const std::array<int, 4>& pair_sign,
                              const std::array<int, 2>& single_sign) {
    CorrelationOctet octet;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                octet[CorrelationOctet::index(x, y, z)] = static_cast<double>(
                    pair_sign[pair_index(bp, x, y, z)] * single_sign[single_index(bp, x, y, z)]);
    return octet;
}

// Vertex octets have entries exactly +1/-1, so the 8 signs form a perfect
// 8-bit signature for deduplication.
unsigned octet_signature(const CorrelationOctet& octet) {
    unsigned sig = 0;
    for (int i = 0; i < 8; ++i)
        if (octet[i] < 0.0) sig |= 1u << i;
    return sig;
}

} // namespace

std::vector<HybridVertex> enumerate_vertices(const std::vector<Bipartition>& bipartitions) {
    std::vector<HybridVertex> vertices;
    std::bitset<256> seen;
    for (Bipartition bp : bipartitions) {
        for (int s = 0; s < 16; ++s) {
            for (int t = 0; t < 4; ++t) {
                HybridVertex v;
                v.bipartition = bp;
                for (int i = 0; i < 4; ++i) v.pair_sign[i] = (s >> i) & 1 ? -1 : 1;
                for (int i = 0; i < 2; ++i) v.single_sign[i] = (t >> i) & 1 ? -1 : 1;
                v.octet = vertex_octet(bp, v.pair_sign, v.single_sign);
                const unsigned sig = octet_signature(v.octet);
                if (seen[sig]) continue;
                seen[sig] = true;
                vertices.push_back(v);
            }
        }
    }
    return vertices;
}

CorrelationOctet trivial_model_octet() {
    HybridVertex v;
    v.bipartition = Bipartition::Pair12;
    v.pair_sign = {+1, +1, +1, -1}; // AB, AB', A'B, A'B'
    v.single_sign = {+1, -1};       // C, C'
    return vertex_octet(v.bipartition, v.pair_sign, v.single_sign);
}

HybridCertificate membership(const CorrelationOctet& octet,
                             const std::vector<Bipartition>& bipartitions, double tolerance) {
    const std::vector<HybridVertex> vertices = enumerate_vertices(bipartitions);
    const std::size_t n = vertices.size();
    const std::size_t rows = 9; // 8 correlator coordinates + convexity row

    std::vector<double> a(rows * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < 8; ++i) a[i * n + j] = vertices[j].octet[static_cast<int>(i)];
        a[8 * n + j] = 1.0;
    }
    std::vector<double> b(rows);
    for (std::size_t i = 0; i < 8; ++i) b[i] = octet[static_cast<int>(i)];
    b[8] = 1.0;

    const FeasibilityResult lp = solve_feasibility(a, rows, n, b, tolerance);

    HybridCertificate cert;
    if (lp.feasible) {
        cert.verdict = Verdict::Inside;
        cert.weights = lp.solution;
        return cert;
    }

    // Farkas vector y = (h, -offset): h.v <= offset for every vertex while
    // h.octet > offset. Scale h to max-norm 1 for reproducible output.
    cert.verdict = Verdict::Outside;
    for (int i = 0; i < 8; ++i) cert.separator[i] = lp.farkas[i];
    cert.offset = -lp.farkas[8];
    double scale = 0.0;
    for (double h : cert.separator) scale = std::max(scale, std::abs(h));
    if (scale > 0.0) {
        for (double& h : cert.separator) h /= scale;
        cert.offset /= scale;
    }
    return cert;
}

bool verify_certificate(const CorrelationOctet& octet, const HybridCertificate& certificate,
                        const std::vector<HybridVertex>& vertices, double tolerance) {
    if (certificate.verdict == Verdict::Inside) {
        if (certificate.weights.size() != vertices.size()) return false;
        double sum = 0.0;
        std::array<double, 8> mix{};
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            const double q = certificate.weights[j];
            if (q < -tolerance) return false;
            sum += q;
            for (int i = 0; i < 8; ++i) mix[i] += q * vertices[j].octet[i];
        }
        if (std::abs(sum - 1.0) > tolerance) return false;
        for (int i = 0; i < 8; ++i)
            if (std::abs(mix[i] - octet[i]) > tolerance) return false;
        return true;
    }

    double at_octet = -certificate.offset;
    for (int i = 0; i < 8; ++i) at_octet += certificate.separator[i] * octet[i];
    if (at_octet <= tolerance) return false;
    for (const HybridVertex& v : vertices) {
        double at_vertex = -certificate.offset;
        for (int i = 0; i < 8; ++i) at_vertex += certificate.separator[i] * v.octet[i];
        if (at_vertex > tolerance) return false;
    }
    return true;
}

} // namespace tribell
