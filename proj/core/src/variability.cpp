#include "tolfit/variability.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tolfit/matrix.hpp"

namespace tolfit {

std::vector<double> b_hat(const IntervalVector& b) {
    if (b.empty()) throw std::invalid_argument("b_hat: empty right-hand side");
    std::vector<double> out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = 0.5 * (std::abs(b[i].lo) + std::abs(b[i].hi));
    return out;
}

VariabilityReport variability(const IntervalSystem& sys, const FitResult& fit,
                              const CondResult& cond) {
    const std::size_t m = sys.rows();
    const std::size_t n = sys.cols();
    if (fit.x_hat.size() != n)
        throw std::invalid_argument("variability: estimate length mismatch");

    VariabilityReport rep;
    rep.max_tol = fit.max_tol;
    rep.min_cond = cond.min_cond;
    rep.b_hat = b_hat(sys.b);
    rep.b_hat_norm = norm_2(rep.b_hat);
    if (rep.b_hat_norm == 0.0)
        throw std::invalid_argument(
            "variability: right-hand side is identically zero");

    rep.x_hat_norm = norm_2(fit.x_hat);
    rep.x_hat_zero = rep.x_hat_norm == 0.0;
    rep.sqrt_factor_dim = std::min(m, n);

    if (fit.max_tol == 0.0) {
        // A zero compatibility reserve means zero variability by definition,
        // even when the conditioning minimum is infinite.
        rep.ive = 0.0;
        rep.rve = 0.0;
    } else {
        const double root = std::sqrt(static_cast<double>(rep.sqrt_factor_dim));
        // Guard the inf * 0 case: a zero estimate has zero variability no
        // matter how badly the matrix can be conditioned.
        rep.ive = rep.x_hat_zero
                      ? 0.0
                      : root * fit.max_tol * cond.min_cond * rep.x_hat_norm /
                            rep.b_hat_norm;
        rep.rve = static_cast<double>(n) * cond.min_cond * fit.max_tol /
                  rep.b_hat_norm;
    }
    rep.abs_ive = std::abs(rep.ive);
    return rep;
}

}  // namespace tolfit
