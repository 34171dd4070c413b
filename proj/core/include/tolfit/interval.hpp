#pragma once

// Closed-interval scalars, vectors and matrices: the data layer everything
// else builds on. Plain double arithmetic without directed rounding; fine for
// the desk-scale data this library targets, not for certified enclosures.

#include <cstddef>
#include <span>
#include <vector>

namespace tolfit {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    // throws std::invalid_argument when lo > hi (or either endpoint is NaN)
    Interval(double lo_, double hi_);

    static Interval point(double v) { return Interval(v, v); }
    bool is_point() const { return lo == hi; }
};

bool operator==(const Interval& a, const Interval& b);

double mid(const Interval& v);
double rad(const Interval& v);
// magnitude: largest absolute value over the interval, max(|lo|, |hi|)
double mag(const Interval& v);

Interval operator+(const Interval& a, const Interval& b);
// exact range of {a*s : a in v}; flips endpoints for s < 0
Interval scale(const Interval& v, double s);

using IntervalVector = std::vector<Interval>;

class IntervalMatrix {
  public:
    // throws std::invalid_argument unless rows, cols >= 1
    IntervalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Interval& at(std::size_t i, std::size_t j);
    const Interval& at(std::size_t i, std::size_t j) const;

    std::span<const Interval> row(std::size_t i) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Interval> e_;
};

bool operator==(const IntervalMatrix& a, const IntervalMatrix& b);

// Exact range of sum_j row[j] * x[j] over all pointwise selections from the
// row intervals. Lengths must agree.
Interval row_image(std::span<const Interval> row, std::span<const double> x);

} // namespace tolfit
