#include "tribell/lp.hpp"

#include <cmath>
#include <limits>

#include "tribell/errors.hpp"

namespace tribell {

// Phase-1 simplex on  min 1ᵀs  s.t.  A x + s = b, x >= 0, s >= 0  after
// flipping rows so b >= 0. Feasible iff the optimum is (numerically) zero.
// The Farkas vector for an infeasible system is read off the final
// multipliers y = c_B B^{-1}: optimality gives yᵀA <= 0 and yᵀb > 0.
FeasibilityResult solve_feasibility(const std::vector<double>& a, std::size_t rows,
                                    std::size_t cols, std::vector<double> b,
                                    double feasibility_tol, double pivot_tol, int max_pivots) {
    const std::size_t m = rows;
    const std::size_t n = cols;
    const std::size_t total = n + m; // structural + artificial columns

    std::vector<double> flip(m, 1.0);
    std::vector<double> t(m * total, 0.0); // tableau
    std::vector<double> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        flip[i] = (b[i] < 0.0) ? -1.0 : 1.0;
        rhs[i] = flip[i] * b[i];
        for (std::size_t j = 0; j < n; ++j) t[i * total + j] = flip[i] * a[i * cols + j];
        t[i * total + n + i] = 1.0;
    }

    // Reduced-cost row (costs: structural 0, artificial 1) and objective.
    std::vector<double> red(total, 0.0);
    double objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double colsum = 0.0;
        for (std::size_t i = 0; i < m; ++i) colsum += t[i * total + j];
        red[j] = -colsum;
    }
    for (std::size_t i = 0; i < m; ++i) objective += rhs[i];

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    int pivots = 0;
    while (true) {
        // Bland: entering = lowest-index column with negative reduced cost.
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j) {
            if (red[j] < -pivot_tol) {
                enter = j;
                break;
            }
        }
        if (enter == total) break; // optimal

        // Ratio test; Bland tie-break on the smallest basic variable index.
        std::size_t leave = m;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            const double pivot = t[i * total + enter];
            if (pivot > pivot_tol) {
                const double ratio = rhs[i] / pivot;
                if (ratio < best_ratio - pivot_tol ||
                    (std::abs(ratio - best_ratio) <= pivot_tol &&
                     (leave == m || basis[i] < basis[leave]))) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave == m)
            throw NumericalFailureError("solve_feasibility: unbounded phase-1 objective");
        if (++pivots > max_pivots)
            throw NumericalFailureError("solve_feasibility: pivot cap exceeded");

        // Gauss-Jordan pivot on (leave, enter).
        const double piv = t[leave * total + enter];
        for (std::size_t j = 0; j < total; ++j) t[leave * total + j] /= piv;
        rhs[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            const double f = t[i * total + enter];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < total; ++j) t[i * total + j] -= f * t[leave * total + j];
            rhs[i] -= f * rhs[leave];
        }
        {
            const double f = red[enter];
            for (std::size_t j = 0; j < total; ++j) red[j] -= f * t[leave * total + j];
            objective += f * rhs[leave]; // f < 0: phase-1 objective decreases
        }
        basis[leave] = enter;
    }

    FeasibilityResult result;
    result.pivots = pivots;
    if (objective <= feasibility_tol) {
        result.feasible = true;
        result.solution.assign(n, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < n) result.solution[basis[i]] = std::max(rhs[i], 0.0);
        }
    } else {
        result.feasible = false;
        // y_i = c_{n+i} - red_{n+i} = 1 - red_{n+i}, then undo the row flips.
        result.farkas.assign(m, 0.0);
        for (std::size_t i = 0; i < m; ++i) result.farkas[i] = flip[i] * (1.0 - red[n + i]);
    }
    return result;
}

} // namespace tribell
