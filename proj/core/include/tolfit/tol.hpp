#pragma once

// The recognizing functional of the tolerable solution set:
//
//   tol(x) = min_i ( rad b_i - mag( mid b_i - row_image(A_i, x) ) )
//
// x belongs to the tolerable set exactly when tol(x) >= 0. The functional is
// concave and piecewise linear in x, which the maximizer and the solution-set
// geometry both lean on.

#include <span>
#include <vector>

#include "tolfit/interval.hpp"

namespace tolfit {

struct IntervalSystem {
    IntervalMatrix A;
    IntervalVector b;

    // throws std::invalid_argument unless b has exactly one component per row
    IntervalSystem(IntervalMatrix A_, IntervalVector b_);

    std::size_t rows() const { return A.rows(); }
    std::size_t cols() const { return A.cols(); }
};

enum class ActiveEndpoint { lo, hi };

struct TolValue {
    double value = 0.0;
    // smallest row index attaining the outer min
    std::size_t active_row = 0;
    // which end of that row's image attains the inner magnitude; lo wins ties
    ActiveEndpoint active_endpoint = ActiveEndpoint::lo;
};

TolValue tol(const IntervalSystem& sys, std::span<const double> x);

// One supergradient of the concave map x -> tol(sys, x).value. At kinks the
// same tie-break as tol() picks the piece, and components sitting exactly at
// zero count as nonnegative, so the selection is deterministic.
std::vector<double> tol_subgradient(const IntervalSystem& sys, std::span<const double> x);

// Every rhs component widened (C > 0) or symmetrically narrowed (C < 0):
// b_i -> [b_i.lo - C, b_i.hi + C]. Shifts tol by exactly +C everywhere.
// C < -min_i rad(b_i) would turn some component inside out; rejected.
IntervalSystem shift_rhs(const IntervalSystem& sys, double C);

// b_i -> [b_i.lo + M, b_i.hi - M]. With M = max tol this pins the maximum of
// the contracted system at zero without moving the argmax.
// Requires 0 <= M <= min_i rad(b_i).
IntervalSystem contract_rhs(const IntervalSystem& sys, double M);

} // namespace tolfit
