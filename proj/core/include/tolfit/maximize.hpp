#pragma once

// Maximizing the recognizing functional. Two routes:
//  - maximize_tol: nonsmooth concave ascent (subgradient steps with space
//    dilation along successive supergradient differences), any dimension;
//  - maximize_tol_exact: the global optimum from one small lp per sign
//    orthant, exponential in n and therefore capped at n <= 12.

#include <vector>

#include "tolfit/tol.hpp"

namespace tolfit {

enum class FitMethod { ascent, exact_oracle };

struct SolverConfig {
    std::vector<double> start;    // empty means the zero vector
    double step_tol = 1e-10;     // converged when the iterate stops moving ...
    double improve_tol = 1e-12;  // ... and the best value stops improving
    int max_iters = 20000;
    bool record_history = false;  // fill FitResult::best_history
};

struct FitResult {
    double max_tol = 0.0;
    std::vector<double> x_hat;
    FitMethod method = FitMethod::ascent;
    int iterations = 0;
    bool converged = false;
    // exact oracle only: some other orthant ties within 1e-9 of the maximum
    // at a point more than 1e-6 away, i.e. the argmax is (nearly) a face
    bool near_degenerate = false;
    std::vector<double> best_history;  // best-so-far per iteration, on request
};

FitResult maximize_tol(const IntervalSystem& sys, const SolverConfig& cfg = {});

// throws std::invalid_argument when sys.cols() > 12
FitResult maximize_tol_exact(const IntervalSystem& sys);

} // namespace tolfit
