#pragma once

#include <cstdint>
#include <vector>

#include "tolfit/interval.hpp"
#include "tolfit/matrix.hpp"

namespace tolfit {

// Singular values of a dense matrix, sorted in descending order.  Computed
// with a one-sided Jacobi iteration, which is slow but accurate and has no
// external dependencies; all matrices in this library are small.
std::vector<double> singular_values(const Matrix& a);

// Spectral condition number sigma_max / sigma_min.  Returns +infinity when
// the matrix is numerically rank deficient (sigma_min <= 1e-14 * sigma_max)
// or identically zero.
double cond2(const Matrix& a);

// Search settings for min_cond.  The defaults are deliberately generous:
// the objective is cheap for the matrix sizes we care about and a sloppy
// minimum silently inflates every variability figure derived from it.
struct AnnealConfig {
    std::uint64_t seed = 42;
    int restarts = 8;        // independent annealing chains
    int steps = 5000;        // proposals per chain
    double cooling = 0.995;  // geometric temperature decay per step
    double proposal_scale = 0.1;  // Gaussian step, relative to entry radius
    int vertex_probes = 128;      // random corner matrices evaluated up front
    int interior_probes = 128;    // random interior matrices evaluated up front
};

struct CondResult {
    double min_cond = 0.0;  // smallest spectral condition number found
    Matrix argmin;          // point matrix achieving it
    long evaluations = 0;   // objective evaluations across all probes/chains
    std::uint64_t seed = 0; // seed the search ran with, for reproducibility
    // True when every matrix evaluated was rank deficient, i.e. min_cond is
    // +infinity and argmin is just the midpoint matrix.
    bool rank_deficient_everywhere = false;
};

// Minimum spectral condition number over all point matrices contained in the
// interval matrix a.  Deterministic for a fixed config.  When the number of
// non-degenerate entries is small enough the corner matrices are enumerated
// exhaustively; simulated annealing then refines from the best start found.
CondResult min_cond(const IntervalMatrix& a, const AnnealConfig& cfg = {});

}  // namespace tolfit
