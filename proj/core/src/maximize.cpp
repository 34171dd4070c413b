#include "tolfit/maximize.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "orthant_lp.hpp"
#include "tolfit/lp.hpp"
#include "tolfit/matrix.hpp"

namespace tolfit {

namespace {

// tol value and one supergradient in a single pass over the rows
struct Oracle {
    const IntervalSystem& sys;
    long calls = 0;

    double eval(std::span<const double> x, std::vector<double>& grad) {
        ++calls;
        const std::size_t m = sys.rows(), n = sys.cols();
        double best = 0.0;
        std::size_t best_row = 0;
        bool best_lo = true, first = true;
        for (std::size_t i = 0; i < m; ++i) {
            const Interval img = row_image(sys.A.row(i), x);
            const double mb = mid(sys.b[i]);
            const double from_lo = mb - img.lo;
            const double from_hi = img.hi - mb;
            const bool lo_active = from_lo >= from_hi;
            const double v = rad(sys.b[i]) - (lo_active ? from_lo : from_hi);
            if (first || v < best) {
                best = v;
                best_row = i;
                best_lo = lo_active;
                first = false;
            }
        }
        grad.assign(n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const Interval& a = sys.A.at(best_row, j);
            const bool nonneg = x[j] >= 0.0;
            grad[j] = best_lo ? (nonneg ? a.lo : a.hi) : -(nonneg ? a.hi : a.lo);
        }
        return best;
    }
};

} // namespace

// Space-dilation ascent (r-algorithm flavor): normalized subgradient steps in
// a transformed space whose metric B gets squeezed along the difference of
// successive supergradients. Works directly on the concave tol, so "descent"
// below means descent on -tol.
FitResult maximize_tol(const IntervalSystem& sys, const SolverConfig& cfg) {
    const std::size_t n = sys.cols();
    if (!cfg.start.empty() && cfg.start.size() != n)
        throw std::invalid_argument("maximize_tol: start vector has wrong dimension");

    constexpr double kAlpha = 3.0;      // dilation coefficient
    constexpr double kGrow = 1.25;      // line-search step growth
    constexpr double kShrink = 0.85;    // step decay after a one-step search
    constexpr int kGrowEvery = 3;
    constexpr int kLineCap = 200;
    constexpr int kPatience = 50;       // outer steps without improvement

    Oracle oracle{sys};
    FitResult out;
    out.method = FitMethod::ascent;

    std::vector<double> x = cfg.start.empty() ? std::vector<double>(n, 0.0) : cfg.start;
    std::vector<double> g(n), gdir(n), dir(n), g1(n), r(n), br(n);
    double f = -oracle.eval(x, g);
    for (double& gj : g) gj = -gj;

    std::vector<double> xbest = x;
    double fbest = f;
    if (cfg.record_history) out.best_history.push_back(-fbest);

    bool converged = false;
    const int max_restarts = 8;
    for (int restart = 0; restart < max_restarts && oracle.calls < cfg.max_iters; ++restart) {
        // fresh metric from the current best point
        std::vector<double> B(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) B[i * n + i] = 1.0;
        x = xbest;
        f = -oracle.eval(x, g);
        for (double& gj : g) gj = -gj;
        double h = restart == 0 ? 1.0 : 1.0 / (1 << restart);
        const double f_at_restart = fbest;
        double f_mark = fbest;
        int stall = 0;
        bool inner_done = false;

        while (oracle.calls < cfg.max_iters && !inner_done) {
            // g1 = B^T g ; dir = B g1 / |g1|
            for (std::size_t i = 0; i < n; ++i) {
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k) s += B[k * n + i] * g[k];
                g1[i] = s;
            }
            const double ng1 = norm_2(g1);
            if (ng1 < 1e-15) {  // flat piece: nothing to move along
                converged = inner_done = true;
                break;
            }
            for (std::size_t i = 0; i < n; ++i) {
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k) s += B[i * n + k] * g1[k];
                dir[i] = s / ng1;
            }

            gdir = g;
            int ls = 0;
            double moved = 0.0;
            double d = 1.0;
            while (d > 0.0 && ls < kLineCap && oracle.calls < cfg.max_iters) {
                for (std::size_t i = 0; i < n; ++i) x[i] -= h * dir[i];
                moved += h;
                ++ls;
                f = -oracle.eval(x, g);
                for (double& gj : g) gj = -gj;
                if (f < fbest) {
                    fbest = f;
                    xbest = x;
                }
                if (cfg.record_history) out.best_history.push_back(-fbest);
                d = 0.0;
                for (std::size_t i = 0; i < n; ++i) d += dir[i] * g[i];
                if (ls % kGrowEvery == 0) h *= kGrow;
            }
            if (ls == 1) h *= kShrink;

            const double disp = moved * norm_2(dir);
            if (disp < cfg.step_tol) {
                inner_done = true;
                converged = true;
                break;
            }
            if (fbest < f_mark - cfg.improve_tol) {
                f_mark = fbest;
                stall = 0;
            } else if (++stall > kPatience) {
                inner_done = true;
                converged = true;
                break;
            }

            // squeeze the metric along the supergradient difference
            for (std::size_t i = 0; i < n; ++i) r[i] = g[i] - gdir[i];
            for (std::size_t i = 0; i < n; ++i) {
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k) s += B[k * n + i] * r[k];
                g1[i] = s;
            }
            const double nr = norm_2(g1);
            if (nr > 1e-14) {
                for (double& v : g1) v /= nr;
                for (std::size_t i = 0; i < n; ++i) {
                    double s = 0.0;
                    for (std::size_t k = 0; k < n; ++k) s += B[i * n + k] * g1[k];
                    br[i] = s;
                }
                const double coef = 1.0 / kAlpha - 1.0;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t k = 0; k < n; ++k) B[i * n + k] += coef * br[i] * g1[k];
            }
        }

        if (restart > 0 && f_at_restart - fbest <= cfg.improve_tol && inner_done) break;
    }

    out.max_tol = -fbest;
    out.x_hat = std::move(xbest);
    out.iterations = static_cast<int>(oracle.calls);
    out.converged = converged && oracle.calls < cfg.max_iters;
    return out;
}

FitResult maximize_tol_exact(const IntervalSystem& sys) {
    const std::size_t n = sys.cols();
    if (n > 12)
        throw std::invalid_argument("maximize_tol_exact: 2^n orthant sweep is limited to n <= 12, got n = " +
                                    std::to_string(n));

    struct OrthantOpt {
        double t;
        std::vector<double> x;
    };
    std::vector<OrthantOpt> opts;
    opts.reserve(std::size_t{1} << n);

    std::vector<int> signs(n, 1);
    do {
        LinearProgram lp;
        lp.objective.assign(n + 1, 0.0);
        lp.objective[n] = 1.0;  // maximize t over (x, t)
        lp.rows = detail::orthant_rows(sys, signs, true);
        const LpResult res = solve_lp(lp);
        // every orthant problem is feasible (t can always go low enough) and
        // bounded above by min rad(b); anything else is a solver failure
        if (res.status != LpStatus::optimal)
            throw std::runtime_error("maximize_tol_exact: orthant lp did not solve");
        opts.push_back({res.value, std::vector<double>(res.x.begin(), res.x.begin() + n)});
    } while (detail::next_sign_pattern(signs));

    std::size_t best = 0;
    for (std::size_t k = 1; k < opts.size(); ++k)
        if (opts[k].t > opts[best].t) best = k;

    FitResult out;
    out.method = FitMethod::exact_oracle;
    out.max_tol = opts[best].t;
    out.x_hat = opts[best].x;
    for (double& v : out.x_hat)
        if (v == 0.0) v = 0.0;  // normalize -0
    out.iterations = static_cast<int>(opts.size());
    out.converged = true;
    for (std::size_t k = 0; k < opts.size(); ++k) {
        if (k == best || opts[k].t < out.max_tol - 1e-9) continue;
        double dist = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            dist = std::max(dist, std::fabs(opts[k].x[j] - out.x_hat[j]));
        if (dist > 1e-6) {
            out.near_degenerate = true;
            break;
        }
    }
    return out;
}

} // namespace tolfit
