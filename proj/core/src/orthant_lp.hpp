#pragma once

// Internal helper shared by the exact tol maximizer and the solution-set
// geometry. Inside one sign orthant the row images are linear in x:
//
//   image_i(x) = [ L_i . x, H_i . x ]   with
//   L_ij = a_ij.lo, H_ij = a_ij.hi   where sign_j >= 0
//   L_ij = a_ij.hi, H_ij = a_ij.lo   where sign_j < 0
//
// so { x in orthant : tol(x) >= t } is the polyhedron
//   H_i . x <= b_i.hi - t,   L_i . x >= b_i.lo + t,   sign_j * x_j >= 0.

#include <cstddef>
#include <span>
#include <vector>

#include "tolfit/lp.hpp"
#include "tolfit/tol.hpp"

namespace tolfit::detail {

// constraint rows over variables (x_1..x_n [, t]); with_t appends a t column
// (coefficient +1 on every image row, 0 on sign rows)
inline std::vector<LpRow> orthant_rows(const IntervalSystem& sys, std::span<const int> signs,
                                       bool with_t) {
    const std::size_t m = sys.rows(), n = sys.cols();
    const std::size_t w = n + (with_t ? 1 : 0);
    std::vector<LpRow> rows;
    rows.reserve(2 * m + n);
    for (std::size_t i = 0; i < m; ++i) {
        LpRow up, down;  // H.x + t <= b.hi   and   -L.x + t <= -b.lo
        up.a.assign(w, 0.0);
        down.a.assign(w, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const Interval& a = sys.A.at(i, j);
            const double hi_coeff = signs[j] >= 0 ? a.hi : a.lo;
            const double lo_coeff = signs[j] >= 0 ? a.lo : a.hi;
            up.a[j] = hi_coeff;
            down.a[j] = -lo_coeff;
        }
        if (with_t) {
            up.a[n] = 1.0;
            down.a[n] = 1.0;
        }
        up.rhs = sys.b[i].hi;
        down.rhs = -sys.b[i].lo;
        rows.push_back(std::move(up));
        rows.push_back(std::move(down));
    }
    for (std::size_t j = 0; j < n; ++j) {
        LpRow sgn;  // -sign_j * x_j <= 0
        sgn.a.assign(w, 0.0);
        sgn.a[j] = signs[j] >= 0 ? -1.0 : 1.0;
        sgn.rhs = 0.0;
        rows.push_back(std::move(sgn));
    }
    return rows;
}

// advances a +/-1 sign pattern through all 2^n combinations; returns false
// after the last one
inline bool next_sign_pattern(std::vector<int>& signs) {
    for (std::size_t j = 0; j < signs.size(); ++j) {
        if (signs[j] > 0) {
            signs[j] = -1;
            return true;
        }
        signs[j] = 1;
    }
    return false;
}

} // namespace tolfit::detail
