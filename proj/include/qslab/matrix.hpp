#pragma once

// Dense row-major matrices over complex numbers or quaternions.
//
// Scalars multiply vectors from the right (right-linear convention), so a
// product A*B is always formed as sum_k A(i,k) * B(k,j) with that operand order.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qslab/errors.hpp"
#include "qslab/quaternion.hpp"

namespace qslab {

inline double abs2(const Complex& c) { return std::norm(c); }
inline double abs2(const Quaternion& q) { return norm2(q); }
inline double abs2(double d) { return d * d; }

template <class S>
class Matrix {
 public:
  using value_type = S;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const S& fill = S{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<S>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DomainError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1.0);
    return m;
  }
  static Matrix diagonal(std::span<const S> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<S> data() { return data_; }
  std::span<const S> data() const { return data_; }

  std::vector<S> column(std::size_t c) const {
    std::vector<S> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_column(std::size_t c, std::span<const S> v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  /// Conjugate transpose.
  Matrix adjoint() const {
    using std::conj;
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = conj((*this)(r, c));
    return out;
  }
  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }
  /// Entrywise conjugate.
  Matrix conjugate() const {
    using std::conj;
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = conj(data_[k]);
    return out;
  }

  double frobenius() const {
    double s = 0.0;
    for (const auto& v : data_) s += abs2(v);
    return std::sqrt(s);
  }
  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::sqrt(abs2(v)));
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(double s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }

  /// Right scalar multiplication: (M s)(i,j) = M(i,j) s.
  Matrix times_right(const S& s) const {
    Matrix out(*this);
    for (auto& v : out.data_) v = v * s;
    return out;
  }
  /// Left scalar multiplication: (s M)(i,j) = s M(i,j).
  Matrix times_left(const S& s) const {
    Matrix out(*this);
    for (auto& v : out.data_) v = s * v;
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S aik = a(i, k);
        if (aik == S{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  /// Matrix-vector product with the vector on the right.
  std::vector<S> apply(std::span<const S> x) const {
    if (x.size() != cols_) throw DomainError("matrix-vector product: dimension mismatch");
    std::vector<S> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) y[i] += (*this)(i, k) * x[k];
    return y;
  }

  S trace() const {
    S t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimensions differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

using CMatrix = Matrix<Complex>;
using HMatrix = Matrix<Quaternion>;  // quaternion entries
using CVector = std::vector<Complex>;

/// <x, y> = sum conj(x_k) y_k, conjugate-linear in the first slot.
template <class S>
S inner(std::span<const S> x, std::span<const S> y) {
  using std::conj;
  if (x.size() != y.size()) throw DomainError("inner product: dimension mismatch");
  S s{};
  for (std::size_t k = 0; k < x.size(); ++k) s += conj(x[k]) * y[k];
  return s;
}

template <class S>
double vector_norm(std::span<const S> x) {
  double s = 0.0;
  for (const auto& v : x) s += abs2(v);
  return std::sqrt(s);
}

}  // namespace qslab
