#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bergq/error.hpp"

namespace bergq {

// Dense row-major matrix over an exact ring T. T supplies +, -, *, == and
// is_zero(); the zero element is taken from the constructor so that field
// tags travel with the matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  static Matrix diagonal(const std::vector<T>& entries, const T& zero) {
    Matrix m(entries.size(), entries.size(), zero);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& entries() const noexcept { return data_; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i != j && !(*this)(i, j).is_zero()) return false;
      }
    }
    return true;
  }

  template <class Fn>
  auto map(Fn fn) const -> Matrix<decltype(fn(std::declval<const T&>()))> {
    using U = decltype(fn(std::declval<const T&>()));
    Matrix<U> out;
    out.rows_ = rows_;
    out.cols_ = cols_;
    out.data_.reserve(data_.size());
    for (const auto& x : data_) out.data_.push_back(fn(x));
    return out;
  }

  Matrix operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = out.data_[k] + b.data_[k];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = out.data_[k] - b.data_[k];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    return multiply(a, b, [](const T& x, const T& y) { return x * y; });
  }

  // Row-column product with a caller-supplied entry product.
  template <class Mul>
  static Matrix multiply(const Matrix& a, const Matrix& b, Mul mul) {
    if (a.cols_ != b.rows_ || a.data_.empty() || b.data_.empty()) {
      raise(ErrorCode::ShapeMismatch, "cannot multiply " + a.shape() + " by " + b.shape());
    }
    Matrix out(a.rows_, b.cols_, a.data_.front() - a.data_.front());
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) {
        T acc = mul(a(i, 0), b(0, j));
        for (std::size_t k = 1; k < a.cols_; ++k) acc = acc + mul(a(i, k), b(k, j));
        out(i, j) = std::move(acc);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      raise(ErrorCode::ShapeMismatch, "shapes " + shape() + " and " + b.shape() + " differ");
    }
  }

 private:
  template <class U>
  friend class Matrix;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

template <class T>
T trace(const Matrix<T>& a) {
  if (!a.is_square() || a.rows() == 0) raise(ErrorCode::ShapeMismatch, "trace of non-square matrix");
  T t = a(0, 0);
  for (std::size_t i = 1; i < a.rows(); ++i) t = t + a(i, i);
  return t;
}

}  // namespace bergq
