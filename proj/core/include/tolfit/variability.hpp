#pragma once

#include <vector>

#include "tolfit/conditioning.hpp"
#include "tolfit/maximize.hpp"
#include "tolfit/tol.hpp"

namespace tolfit {

// Magnitude-averaged right-hand side |b_i| = (|lo_i| + |hi_i|) / 2, the
// scaling vector used by the variability measures.  Throws
// std::invalid_argument when b is empty.
std::vector<double> b_hat(const IntervalVector& b);

// Variability of an interval-regression estimate.  Both measures scale the
// fitted compatibility reserve by the best achievable conditioning of the
// data matrix, so a large value flags an estimate that small changes of the
// data could move a lot.
struct VariabilityReport {
    double ive = 0.0;      // interval variability, signed like max_tol
    double abs_ive = 0.0;  // |ive|, what gets compared against hull radii
    double rve = 0.0;      // relative variability, in units of 1/|b|
    double max_tol = 0.0;        // compatibility reserve the measures scale
    double min_cond = 0.0;       // conditioning minimum used by both measures
    std::vector<double> b_hat;   // the |b| scaling vector itself
    double b_hat_norm = 0.0;     // Euclidean norm of b_hat
    double x_hat_norm = 0.0;     // Euclidean norm of the estimate
    std::size_t sqrt_factor_dim = 0;  // dimension under the square root in ive
    bool x_hat_zero = false;  // estimate was identically zero (degenerate)
};

// Computes the variability measures for a fitted estimate.  `cond` must be
// the conditioning minimum of the same system's matrix.  Throws
// std::invalid_argument when the right-hand side is identically zero, since
// both measures are undefined without a scale.
VariabilityReport variability(const IntervalSystem& sys, const FitResult& fit,
                              const CondResult& cond);

}  // namespace tolfit
