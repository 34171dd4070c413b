#include "tolfit/interval.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tolfit {

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    // the negated comparison also rejects NaN endpoints
    if (!(lo_ <= hi_))
        throw std::invalid_argument("interval endpoints out of order: [" + std::to_string(lo_) +
                                    ", " + std::to_string(hi_) + "]");
}

bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }

double mid(const Interval& v) { return 0.5 * (v.lo + v.hi); }

double rad(const Interval& v) { return 0.5 * (v.hi - v.lo); }

double mag(const Interval& v) { return std::max(std::fabs(v.lo), std::fabs(v.hi)); }

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval scale(const Interval& v, double s) {
    if (s >= 0.0) return Interval(v.lo * s, v.hi * s);
    return Interval(v.hi * s, v.lo * s);
}

IntervalMatrix::IntervalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("interval matrix needs at least one row and one column");
}

Interval& IntervalMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("interval matrix index out of range");
    return e_[i * cols_ + j];
}

const Interval& IntervalMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("interval matrix index out of range");
    return e_[i * cols_ + j];
}

std::span<const Interval> IntervalMatrix::row(std::size_t i) const {
    if (i >= rows_) throw std::out_of_range("interval matrix row out of range");
    return {e_.data() + i * cols_, cols_};
}

bool operator==(const IntervalMatrix& a, const IntervalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a.at(i, j) == b.at(i, j))) return false;
    return true;
}

Interval row_image(std::span<const Interval> row, std::span<const double> x) {
    if (row.size() != x.size())
        throw std::invalid_argument("row_image: row has " + std::to_string(row.size()) +
                                    " entries but x has " + std::to_string(x.size()));
    double lo = 0.0, hi = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (x[j] >= 0.0) {
            lo += row[j].lo * x[j];
            hi += row[j].hi * x[j];
        } else {
            lo += row[j].hi * x[j];
            hi += row[j].lo * x[j];
        }
    }
    return Interval(lo, hi);
}

} // namespace tolfit
