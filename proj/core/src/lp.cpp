#include "tolfit/lp.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace tolfit {

namespace {

constexpr double kCostEps = 1e-9;
constexpr double kPivotEps = 1e-11;
constexpr double kDegenerateEps = 1e-11;
constexpr int kBlandAfter = 500;
constexpr long kIterCap = 50000;

constexpr double kInf = std::numeric_limits<double>::infinity();

// dense simplex tableau over equality rows T u = b, u >= 0, b >= 0
struct Tableau {
    std::size_t m = 0, n = 0;
    std::vector<double> t;           // m x n
    std::vector<double> b;           // m
    std::vector<std::size_t> basis;  // column basic in each row
    long degenerate_pivots = 0;
    long iterations = 0;

    double& at(std::size_t i, std::size_t j) { return t[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return t[i * n + j]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const double p = at(pr, pc);
        for (std::size_t j = 0; j < n; ++j) at(pr, j) /= p;
        b[pr] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pr) continue;
            const double f = at(i, pc);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) at(i, j) -= f * at(pr, j);
            b[i] -= f * b[pr];
            at(i, pc) = 0.0;
        }
        at(pr, pc) = 1.0;
        basis[pr] = pc;
    }
};

enum class IterOutcome { optimal, unbounded, iteration_limit };

// maximize cost.u over the tableau's feasible region; usable[j] masks columns
// allowed to enter (artificials are frozen out of phase 2)
IterOutcome run_simplex(Tableau& tb, const std::vector<double>& cost,
                        const std::vector<char>& usable) {
    std::vector<double> cb(tb.m);
    while (true) {
        if (tb.iterations++ > kIterCap) return IterOutcome::iteration_limit;
        for (std::size_t i = 0; i < tb.m; ++i) cb[i] = cost[tb.basis[i]];

        // entering column: steepest reduced cost, or the smallest improving
        // index once cycling protection kicked in
        const bool bland = tb.degenerate_pivots > kBlandAfter;
        std::size_t enter = tb.n;
        double best = kCostEps;
        for (std::size_t j = 0; j < tb.n; ++j) {
            if (!usable[j]) continue;
            double z = 0.0;
            for (std::size_t i = 0; i < tb.m; ++i) z += cb[i] * tb.at(i, j);
            const double d = cost[j] - z;
            if (d > best) {
                enter = j;
                if (bland) break;
                best = d;
            }
        }
        if (enter == tb.n) return IterOutcome::optimal;

        // ratio test; ties resolved toward the smallest basis index
        std::size_t leave = tb.m;
        double best_ratio = kInf;
        for (std::size_t i = 0; i < tb.m; ++i) {
            const double a = tb.at(i, enter);
            if (a <= kPivotEps) continue;
            const double r = tb.b[i] / a;
            if (r < best_ratio - 1e-12 ||
                (r < best_ratio + 1e-12 && (leave == tb.m || tb.basis[i] < tb.basis[leave]))) {
                best_ratio = r;
                leave = i;
            }
        }
        if (leave == tb.m) return IterOutcome::unbounded;
        if (best_ratio <= kDegenerateEps) ++tb.degenerate_pivots;
        tb.pivot(leave, enter);
    }
}

} // namespace

LpResult solve_lp(const LinearProgram& lp) {
    const std::size_t ny = lp.objective.size();
    if (!lp.bounds.empty() && lp.bounds.size() != ny)
        throw std::invalid_argument("solve_lp: bounds list does not match variable count");
    for (const LpRow& r : lp.rows)
        if (r.a.size() != ny)
            throw std::invalid_argument("solve_lp: constraint row width does not match objective");

    // substitute every variable with nonnegative ones:
    //   lower bound l finite:  y = l + u      (finite upper adds row u <= upper - l)
    //   only upper finite:     y = upper - u
    //   free:                  y = u+ - u-
    struct Col {
        std::size_t y;
        double sign;
    };
    const auto bound_of = [&](std::size_t j) {
        return lp.bounds.empty() ? VarBound{} : lp.bounds[j];
    };
    std::vector<Col> cols;
    std::vector<double> offset(ny, 0.0);           // y = offset + sum of signed u columns
    std::vector<std::pair<std::size_t, double>> ubound_rows;  // (u column, rhs)
    for (std::size_t j = 0; j < ny; ++j) {
        const VarBound vb = bound_of(j);
        if (vb.lower > vb.upper) return {LpStatus::infeasible, {}, 0.0};
        if (vb.lower > -kInf) {
            offset[j] = vb.lower;
            cols.push_back({j, +1.0});
            if (vb.upper < kInf) ubound_rows.emplace_back(cols.size() - 1, vb.upper - vb.lower);
        } else if (vb.upper < kInf) {
            offset[j] = vb.upper;
            cols.push_back({j, -1.0});
        } else {
            cols.push_back({j, +1.0});
            cols.push_back({j, -1.0});
        }
    }
    const std::size_t nu = cols.size();

    const std::size_t m = lp.rows.size() + ubound_rows.size();
    std::vector<std::vector<double>> A(m, std::vector<double>(nu, 0.0));
    std::vector<double> rhs(m, 0.0);
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        for (std::size_t k = 0; k < nu; ++k) A[i][k] = lp.rows[i].a[cols[k].y] * cols[k].sign;
        double shift = 0.0;
        for (std::size_t j = 0; j < ny; ++j) shift += lp.rows[i].a[j] * offset[j];
        rhs[i] = lp.rows[i].rhs - shift;
    }
    for (std::size_t e = 0; e < ubound_rows.size(); ++e) {
        const std::size_t i = lp.rows.size() + e;
        A[i][ubound_rows[e].first] = 1.0;
        rhs[i] = ubound_rows[e].second;
    }

    // equality form with slacks; rows arriving with negative rhs get flipped
    // and take an artificial for the phase-1 start basis
    std::size_t n_artificial = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (rhs[i] < 0.0) ++n_artificial;

    Tableau tb;
    tb.m = m;
    tb.n = nu + m + n_artificial;
    tb.t.assign(tb.m * tb.n, 0.0);
    tb.b.assign(m, 0.0);
    tb.basis.assign(m, 0);

    std::vector<char> usable(tb.n, 1);
    std::vector<double> phase1(tb.n, 0.0), phase2(tb.n, 0.0);
    std::size_t art = nu + m;
    for (std::size_t i = 0; i < m; ++i) {
        const double s = rhs[i] < 0.0 ? -1.0 : 1.0;
        for (std::size_t k = 0; k < nu; ++k) tb.at(i, k) = s * A[i][k];
        tb.at(i, nu + i) = s;
        tb.b[i] = s * rhs[i];
        if (rhs[i] < 0.0) {
            tb.at(i, art) = 1.0;
            phase1[art] = -1.0;  // maximize -(sum of artificials)
            tb.basis[i] = art++;
        } else {
            tb.basis[i] = nu + i;
        }
    }
    for (std::size_t k = 0; k < nu; ++k) phase2[k] = lp.objective[cols[k].y] * cols[k].sign;

    const double feas_tol = [&] {
        double s = 1.0;
        for (std::size_t i = 0; i < m; ++i) s = std::max(s, std::fabs(rhs[i]));
        return 1e-8 * s;
    }();

    if (n_artificial > 0) {
        const IterOutcome o = run_simplex(tb, phase1, usable);
        if (o == IterOutcome::iteration_limit) return {LpStatus::iteration_limit, {}, 0.0};
        double infeas = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            if (tb.basis[i] >= nu + m) infeas += tb.b[i];
        if (infeas > feas_tol) return {LpStatus::infeasible, {}, 0.0};
        // drive leftover zero-valued artificials out on the strongest pivot
        // available; rows without one are redundant and get dropped
        for (std::size_t i = tb.m; i-- > 0;) {
            if (tb.basis[i] < nu + m) continue;
            std::size_t pc = tb.n;
            double best_a = 1e-9;
            for (std::size_t j = 0; j < nu + m; ++j)
                if (std::fabs(tb.at(i, j)) > best_a) {
                    best_a = std::fabs(tb.at(i, j));
                    pc = j;
                }
            if (pc != tb.n) {
                tb.pivot(i, pc);
            } else {
                tb.t.erase(tb.t.begin() + static_cast<std::ptrdiff_t>(i * tb.n),
                           tb.t.begin() + static_cast<std::ptrdiff_t>((i + 1) * tb.n));
                tb.b.erase(tb.b.begin() + static_cast<std::ptrdiff_t>(i));
                tb.basis.erase(tb.basis.begin() + static_cast<std::ptrdiff_t>(i));
                --tb.m;
            }
        }
        for (std::size_t j = nu + m; j < tb.n; ++j) usable[j] = 0;
    }

    const IterOutcome o = run_simplex(tb, phase2, usable);
    if (o == IterOutcome::iteration_limit) return {LpStatus::iteration_limit, {}, 0.0};
    if (o == IterOutcome::unbounded) return {LpStatus::unbounded, {}, 0.0};

    std::vector<double> u(nu, 0.0);
    for (std::size_t i = 0; i < tb.m; ++i)
        if (tb.basis[i] < nu) u[tb.basis[i]] = tb.b[i];

    LpResult res;
    res.status = LpStatus::optimal;
    res.x = offset;
    for (std::size_t k = 0; k < nu; ++k) res.x[cols[k].y] += cols[k].sign * u[k];
    res.value = 0.0;
    for (std::size_t j = 0; j < ny; ++j) res.value += lp.objective[j] * res.x[j];
    return res;
}

} // namespace tolfit
