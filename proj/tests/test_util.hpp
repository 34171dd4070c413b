#pragma once

// Shared generators and brute-force oracles for the test suite.  Everything
// here is deliberately slow and obvious: these are the references the fast
// library code is checked against.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "tolfit/tol.hpp"

namespace testutil {

using tolfit::Interval;
using tolfit::IntervalMatrix;
using tolfit::IntervalSystem;
using tolfit::IntervalVector;

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Random interval with midpoint in [-mid_span, mid_span]; point with the
// given probability, otherwise radius up to max_rad.
inline Interval random_interval(std::mt19937_64& rng, double mid_span,
                                double max_rad, double point_prob = 0.25) {
    const double mid = uniform(rng, -mid_span, mid_span);
    const bool point = uniform(rng, 0.0, 1.0) < point_prob;
    const double rad = point ? 0.0 : uniform(rng, 0.0, max_rad);
    return Interval(mid - rad, mid + rad);
}

inline IntervalMatrix random_matrix(std::mt19937_64& rng, std::size_t m,
                                    std::size_t n, double mid_span = 1.5,
                                    double max_rad = 0.5) {
    IntervalMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.at(i, j) = random_interval(rng, mid_span, max_rad);
    return a;
}

// System with an arbitrary right-hand side; its tolerable set may be empty.
inline IntervalSystem random_system(std::mt19937_64& rng, std::size_t m,
                                    std::size_t n) {
    IntervalMatrix a = random_matrix(rng, m, n);
    IntervalVector b;
    b.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        b.push_back(random_interval(rng, 2.0, 1.5, 0.1));
    return IntervalSystem(std::move(a), std::move(b));
}

// System guaranteed to have a nonempty tolerable set: the right-hand side is
// built as the row image at a hidden point x*, widened by positive margins,
// so tol(x*) >= the smallest margin > 0.
inline IntervalSystem random_nonempty_system(std::mt19937_64& rng,
                                             std::size_t m, std::size_t n,
                                             double min_margin = 0.1,
                                             double max_margin = 1.0) {
    IntervalMatrix a = random_matrix(rng, m, n);
    std::vector<double> x_star(n);
    for (double& v : x_star) v = uniform(rng, -2.0, 2.0);

    IntervalVector b;
    b.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Interval img = tolfit::row_image(a.row(i), x_star);
        b.push_back(Interval(img.lo - uniform(rng, min_margin, max_margin),
                             img.hi + uniform(rng, min_margin, max_margin)));
    }
    return IntervalSystem(std::move(a), std::move(b));
}

// Range of sum_j A_ij x_j over all point matrices, by trying all 2^n corner
// choices of the row entries.  Reference for row_image (n <= ~16).
inline Interval corner_image(std::span<const Interval> row,
                             std::span<const double> x) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const std::size_t corners = std::size_t{1} << row.size();
    for (std::size_t mask = 0; mask < corners; ++mask) {
        double sum = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j)
            sum += ((mask >> j) & 1 ? row[j].hi : row[j].lo) * x[j];
        lo = std::min(lo, sum);
        hi = std::max(hi, sum);
    }
    return Interval(lo, hi);
}

// Dense grid maximization of tol over [lo, hi]^2 with the given step.
// Exhaustive on purpose; keep the domain small.
inline double grid_max_tol_2d(const IntervalSystem& sys, double lo, double hi,
                              double step) {
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> x(2);
    const long steps = std::lround((hi - lo) / step);
    for (long i = 0; i <= steps; ++i) {
        x[0] = lo + i * step;
        for (long j = 0; j <= steps; ++j) {
            x[1] = lo + j * step;
            best = std::max(best, tolfit::tol(sys, x).value);
        }
    }
    return best;
}

// Gaussian elimination with partial pivoting; false when near-singular.
inline bool solve_square(std::vector<std::vector<double>> a,
                         std::vector<double> rhs, std::vector<double>& out) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-10) return false;
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = rhs[i] / a[i][i];
    return true;
}

// Brute-force LP oracle: maximize c.x over rows a.x <= rhs by enumerating
// all vertex candidates (every n-subset of tight constraints).  The feasible
// set must be bounded with a vertex optimum, i.e. include box rows.
struct DenseLp {
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    std::vector<double> objective;
};

inline bool vertex_enum_max(const DenseLp& lp, double& best_value) {
    const std::size_t n = lp.objective.size();
    const std::size_t m = lp.rows.size();
    bool found = false;
    best_value = -std::numeric_limits<double>::infinity();

    std::vector<std::size_t> pick(n);
    // Iterate over all strictly increasing index tuples of length n.
    const auto advance = [&]() {
        std::size_t k = n;
        while (k-- > 0) {
            if (++pick[k] <= m - (n - k)) {
                for (std::size_t j = k + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    for (std::size_t j = 0; j < n; ++j) pick[j] = j;

    do {
        std::vector<std::vector<double>> a;
        std::vector<double> r;
        for (std::size_t j : pick) {
            a.push_back(lp.rows[j]);
            r.push_back(lp.rhs[j]);
        }
        std::vector<double> x;
        if (!solve_square(a, r, x)) continue;
        bool feasible = true;
        for (std::size_t i = 0; i < m && feasible; ++i) {
            double dot = 0.0;
            for (std::size_t j = 0; j < n; ++j) dot += lp.rows[i][j] * x[j];
            feasible = dot <= lp.rhs[i] + 1e-9;
        }
        if (!feasible) continue;
        double value = 0.0;
        for (std::size_t j = 0; j < n; ++j) value += lp.objective[j] * x[j];
        best_value = std::max(best_value, value);
        found = true;
    } while (advance());
    return found;
}

}  // namespace testutil
