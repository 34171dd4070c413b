#include "tolfit/solution_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orthant_lp.hpp"
#include "tolfit/conditioning.hpp"
#include "tolfit/lp.hpp"
#include "tolfit/matrix.hpp"

namespace tolfit {

bool tss_member(const IntervalSystem& sys, std::span<const double> x) {
    if (x.size() != sys.cols())
        throw std::invalid_argument("tss_member: x has wrong dimension");
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        const Interval img = row_image(sys.A.row(i), x);
        if (img.lo < sys.b[i].lo || img.hi > sys.b[i].hi) return false;
    }
    return true;
}

const char* to_string(TssStatus status) {
    switch (status) {
        case TssStatus::bounded: return "bounded";
        case TssStatus::unbounded: return "unbounded";
        case TssStatus::empty_tss: return "empty";
        case TssStatus::all_columns_interval: return "all_columns_interval";
    }
    return "unknown";
}

TssStatus tss_status_from_string(const std::string& name) {
    if (name == "bounded") return TssStatus::bounded;
    if (name == "unbounded") return TssStatus::unbounded;
    if (name == "empty") return TssStatus::empty_tss;
    if (name == "all_columns_interval") return TssStatus::all_columns_interval;
    throw std::invalid_argument("unknown set status '" + name + "'");
}

bool is_bounded(const BoundednessVerdict& v) {
    return v.status == TssStatus::bounded || v.status == TssStatus::all_columns_interval;
}

BoundednessVerdict check_boundedness(const IntervalSystem& sys, std::optional<double> max_tol) {
    if (max_tol && *max_tol < 0.0) return {TssStatus::empty_tss, {}};

    std::vector<std::size_t> point_cols;
    for (std::size_t j = 0; j < sys.cols(); ++j) {
        bool point = true;
        for (std::size_t i = 0; i < sys.rows(); ++i)
            if (!sys.A.at(i, j).is_point()) {
                point = false;
                break;
            }
        if (point) point_cols.push_back(j);
    }
    if (point_cols.empty()) return {TssStatus::all_columns_interval, {}};

    Matrix sub(sys.rows(), point_cols.size());
    for (std::size_t i = 0; i < sys.rows(); ++i)
        for (std::size_t k = 0; k < point_cols.size(); ++k)
            sub.at(i, k) = sys.A.at(i, point_cols[k]).lo;

    const std::vector<double> sv = singular_values(sub);
    const double cutoff = 1e-10 * sv.front();
    std::size_t rank = 0;
    for (double s : sv)
        if (s > cutoff) ++rank;

    if (rank < point_cols.size()) return {TssStatus::unbounded, std::move(point_cols)};
    return {TssStatus::bounded, {}};
}

IntervalVector tss_hull(const IntervalSystem& sys) {
    const std::size_t n = sys.cols();
    if (n > 12)
        throw std::invalid_argument("tss_hull: 2^n orthant sweep is limited to n <= 12, got n = " +
                                    std::to_string(n));

    std::vector<double> lo(n, std::numeric_limits<double>::infinity());
    std::vector<double> hi(n, -std::numeric_limits<double>::infinity());
    bool any_feasible = false;

    std::vector<int> signs(n, 1);
    do {
        const std::vector<LpRow> rows = detail::orthant_rows(sys, signs, false);
        bool orthant_known_feasible = false;
        for (std::size_t k = 0; k < n; ++k) {
            for (const double dir : {+1.0, -1.0}) {
                LinearProgram lp;
                lp.objective.assign(n, 0.0);
                lp.objective[k] = dir;
                lp.rows = rows;
                const LpResult res = solve_lp(lp);
                if (res.status == LpStatus::infeasible) {
                    if (orthant_known_feasible)
                        throw std::runtime_error("tss_hull: inconsistent orthant feasibility");
                    goto next_orthant;  // whole orthant slice is empty
                }
                if (res.status == LpStatus::unbounded)
                    throw std::runtime_error("tss_hull: tolerable solution set is unbounded");
                if (res.status != LpStatus::optimal)
                    throw std::runtime_error("tss_hull: lp iteration limit hit");
                orthant_known_feasible = true;
                any_feasible = true;
                lo[k] = std::min(lo[k], res.x[k]);
                hi[k] = std::max(hi[k], res.x[k]);
            }
        }
    next_orthant:;
    } while (detail::next_sign_pattern(signs));

    if (!any_feasible) throw std::runtime_error("tss_hull: tolerable solution set is empty");

    IntervalVector box;
    box.reserve(n);
    for (std::size_t k = 0; k < n; ++k) box.emplace_back(lo[k], hi[k]);
    return box;
}

namespace {

using Point = std::array<double, 2>;

// counterclockwise convex hull (monotone chain); collinear inputs collapse to
// their two extremes, a single cluster to one point
std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    const auto cross = [](const Point& o, const Point& a, const Point& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<Point> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

} // namespace

std::vector<std::array<double, 2>> tss_polygon_2d(const IntervalSystem& sys) {
    if (sys.cols() != 2)
        throw std::invalid_argument("tss_polygon_2d: system must have exactly 2 unknowns");

    constexpr double kFeas = 1e-9;
    std::vector<Point> candidates;

    std::vector<int> signs(2, 1);
    do {
        const std::vector<LpRow> rows = detail::orthant_rows(sys, signs, false);
        // vertices of this orthant's cell: pairwise boundary intersections
        // that satisfy every constraint
        for (std::size_t p = 0; p < rows.size(); ++p) {
            for (std::size_t q = p + 1; q < rows.size(); ++q) {
                const double a1 = rows[p].a[0], b1 = rows[p].a[1], c1 = rows[p].rhs;
                const double a2 = rows[q].a[0], b2 = rows[q].a[1], c2 = rows[q].rhs;
                const double det = a1 * b2 - a2 * b1;
                const double scale = std::max({std::fabs(a1), std::fabs(b1), std::fabs(a2),
                                               std::fabs(b2), 1.0});
                if (std::fabs(det) < 1e-12 * scale * scale) continue;
                const Point pt{(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
                bool ok = true;
                for (const LpRow& r : rows) {
                    const double slack = r.rhs - (r.a[0] * pt[0] + r.a[1] * pt[1]);
                    const double rscale = std::max({std::fabs(r.a[0]), std::fabs(r.a[1]), 1.0}) *
                                          std::max(1.0, std::max(std::fabs(pt[0]), std::fabs(pt[1])));
                    if (slack < -kFeas * rscale) {
                        ok = false;
                        break;
                    }
                }
                if (ok) candidates.push_back(pt);
            }
        }
    } while (detail::next_sign_pattern(signs));

    if (candidates.empty()) return {};

    // snap away duplicates before the hull pass
    std::vector<Point> hull = convex_hull(std::move(candidates));
    std::vector<Point> out;
    for (const Point& p : hull) {
        bool dup = false;
        for (const Point& q : out)
            if (std::fabs(p[0] - q[0]) <= 1e-9 && std::fabs(p[1] - q[1]) <= 1e-9) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(p);
    }
    return out;
}

} // namespace tolfit
