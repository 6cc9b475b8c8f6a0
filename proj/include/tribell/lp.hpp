#pragma once

#include <cstddef>
#include <vector>

namespace tribell {

// Outcome of the linear feasibility problem  A x = b, x >= 0.
struct FeasibilityResult {
    bool feasible = false;
    // When feasible: an x >= 0 with A x = b.
    std::vector<double> solution;
    // When infeasible: a Farkas vector y with yᵀA <= 0 (componentwise)
    // and yᵀb > 0, certifying that no feasible x exists.
    std::vector<double> farkas;
    int pivots = 0;
};

// Dense phase-1 simplex with Bland's anti-cycling rule. A is row-major,
// `rows` x `cols`. Intended for small systems (here at most 9 x ~100).
// Throws NumericalFailureError if the pivot cap is exceeded.
FeasibilityResult solve_feasibility(const std::vector<double>& a, std::size_t rows,
                                    std::size_t cols, std::vector<double> b,
                                    double feasibility_tol = 1e-9, double pivot_tol = 1e-11,
                                    int max_pivots = 10000);

} // namespace tribell
