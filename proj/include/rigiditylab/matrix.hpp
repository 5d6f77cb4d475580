#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "rigiditylab/errors.hpp"
#include "rigiditylab/scalar.hpp"

namespace rigiditylab {

// Dense row-major matrix over an exact scalar type (Rational or
// GaussianRational). Value semantics throughout.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(size_t rows, size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    require(data_.size() == rows_ * cols_, Errc::DimensionMismatch, "matrix data size");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      require(r.size() == cols_, Errc::DimensionMismatch, "ragged initializer");
      for (const auto& x : r) data_.push_back(x);
    }
  }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_square() const { return rows_ == cols_; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, Errc::DimensionMismatch, "matrix product shape");
    Matrix c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, Errc::DimensionMismatch, "matrix sum shape");
    Matrix c = a;
    for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, Errc::DimensionMismatch, "matrix diff shape");
    Matrix c = a;
    for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    require(x.size() == cols_, Errc::DimensionMismatch, "matrix-vector shape");
    std::vector<T> y(rows_, T(0));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

 private:
  size_t rows_;
  size_t cols_;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<GaussianRational>;

// Widens a real matrix into Gaussian-rational entries.
ComplexMatrix complexify(const RationalMatrix& m);

// Extracts the real part; throws NotReal if any entry has nonzero
// imaginary part.
RationalMatrix real_part_checked(const ComplexMatrix& m);

}  // namespace rigiditylab
