#pragma once

// Dense point (non-interval) matrices and the couple of vector norms used
// around the library. Row-major doubles, desk scale, no BLAS.

#include <cstddef>
#include <span>
#include <vector>

#include "tolfit/interval.hpp"

namespace tolfit {

class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    double at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::span<const double> data() const { return e_; }
    std::span<double> data() { return e_; }

    Matrix transposed() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> e_;
};

bool operator==(const Matrix& a, const Matrix& b);

Matrix mid_matrix(const IntervalMatrix& a);
Matrix rad_matrix(const IntervalMatrix& a);

double norm_2(std::span<const double> v);
double norm_inf(std::span<const double> v);

} // namespace tolfit
