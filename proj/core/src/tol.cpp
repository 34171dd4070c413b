#include "tolfit/tol.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace tolfit {

IntervalSystem::IntervalSystem(IntervalMatrix A_, IntervalVector b_)
    : A(std::move(A_)), b(std::move(b_)) {
    if (b.size() != A.rows())
        throw std::invalid_argument("interval system: matrix has " + std::to_string(A.rows()) +
                                    " rows but rhs has " + std::to_string(b.size()) +
                                    " components");
}

namespace {

struct RowTol {
    double value;
    ActiveEndpoint endpoint;
};

// rad b - mag(mid b - image); the magnitude is attained at the image's lo
// endpoint when mid b - image.lo >= image.hi - mid b (ties go to lo)
RowTol row_tol(const Interval& bi, const Interval& image) {
    const double m = mid(bi);
    const double from_lo = m - image.lo;
    const double from_hi = image.hi - m;
    if (from_lo >= from_hi) return {rad(bi) - from_lo, ActiveEndpoint::lo};
    return {rad(bi) - from_hi, ActiveEndpoint::hi};
}

} // namespace

TolValue tol(const IntervalSystem& sys, std::span<const double> x) {
    if (x.size() != sys.cols())
        throw std::invalid_argument("tol: x has " + std::to_string(x.size()) +
                                    " components, system has " + std::to_string(sys.cols()));
    TolValue out;
    bool first = true;
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        const RowTol rt = row_tol(sys.b[i], row_image(sys.A.row(i), x));
        if (first || rt.value < out.value) {
            out.value = rt.value;
            out.active_row = i;
            out.active_endpoint = rt.endpoint;
            first = false;
        }
    }
    return out;
}

std::vector<double> tol_subgradient(const IntervalSystem& sys, std::span<const double> x) {
    const TolValue tv = tol(sys, x);
    const std::size_t i = tv.active_row;
    std::vector<double> g(sys.cols());
    for (std::size_t j = 0; j < sys.cols(); ++j) {
        const Interval& a = sys.A.at(i, j);
        // endpoint of a_ij that the active image endpoint picks up under the
        // sign of x_j (x_j == 0 counts as nonnegative)
        const bool nonneg = x[j] >= 0.0;
        if (tv.active_endpoint == ActiveEndpoint::lo) {
            // active piece: (image lower boundary) - b_i.lo, grows with image lo
            g[j] = nonneg ? a.lo : a.hi;
        } else {
            // active piece: b_i.hi - (image upper boundary)
            g[j] = -(nonneg ? a.hi : a.lo);
        }
    }
    return g;
}

IntervalSystem shift_rhs(const IntervalSystem& sys, double C) {
    IntervalVector b2;
    b2.reserve(sys.b.size());
    for (const Interval& bi : sys.b) {
        if (rad(bi) + C < 0.0)
            throw std::invalid_argument("shift_rhs: C = " + std::to_string(C) +
                                        " empties a rhs component of radius " +
                                        std::to_string(rad(bi)));
        b2.emplace_back(bi.lo - C, bi.hi + C);
    }
    return {sys.A, std::move(b2)};
}

IntervalSystem contract_rhs(const IntervalSystem& sys, double M) {
    if (M < 0.0) throw std::invalid_argument("contract_rhs: M must be nonnegative");
    return shift_rhs(sys, -M);
}

} // namespace tolfit
