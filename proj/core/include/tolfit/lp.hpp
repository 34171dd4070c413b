#pragma once

// Small dense linear programming core: maximize c.y subject to a.y <= rhs
// rows plus optional per-variable bounds. Self-contained two-phase simplex,
// sized for the orthant subproblems this library generates (tens of variables,
// at most a few thousand rows).

#include <limits>
#include <vector>

namespace tolfit {

struct LpRow {
    std::vector<double> a;
    double rhs = 0.0;
};

struct VarBound {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
};

struct LinearProgram {
    std::vector<double> objective;  // maximized
    std::vector<LpRow> rows;
    std::vector<VarBound> bounds;   // empty means every variable is free
};

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    std::vector<double> x;  // filled for optimal
    double value = 0.0;
};

// Optimal objective accurate to about 1e-9 on well-scaled data. Pivoting uses
// the steepest reduced cost and falls back to Bland's rule for good once 500
// degenerate pivots accumulate, so cycling terminates.
LpResult solve_lp(const LinearProgram& lp);

} // namespace tolfit
