#pragma once

// Small dense linear algebra over an abstract field. Matrices are tiny
// (n <= 12 or so), so everything is plain row-major storage and Gaussian
// elimination; in exact mode pivots are the first nonzero entry, in float
// mode the largest one.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hermlie/scalar.hpp"

namespace hermlie {

template <Field F>
using Vector = std::vector<F>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, F(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    const int r = int(rows.size());
    const int c = r ? int(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (int(rows[i].size()) != c) throw DimensionError("ragged matrix rows");
      for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  F& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const F& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  Vector<F> column(int j) const {
    Vector<F> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_column(int j, const Vector<F>& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
  friend Matrix operator*(const F& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (hermlie::is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vector<F> operator*(const Matrix& a, const Vector<F>& v) {
    if (a.cols_ != int(v.size())) throw DimensionError("matrix-vector shape mismatch");
    Vector<F> out(a.rows_, F(0));
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  F trace() const {
    F s(0);
    for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!hermlie::is_zero(x)) return false;
    return true;
  }

  /// Largest absolute entry.
  F max_abs() const {
    F m(0);
    for (const auto& x : a_) update_max_abs(m, x);
    return m;
  }

  /// Entrywise equality up to the backend's zero test.
  bool approx_equal(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!hermlie::is_zero(F(a_[k] - o.a_[k]))) return false;
    return true;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.approx_equal(b); }

  template <Field G>
  Matrix<G> convert() const {
    Matrix<G> m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if constexpr (std::is_same_v<F, G>)
          m(i, j) = (*this)(i, j);
        else
          m(i, j) = from_rational<G>((*this)(i, j));
      }
    return m;
  }

  const std::vector<F>& data() const { return a_; }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<F> a_;
};

// ---------------------------------------------------------------- vectors

template <Field F>
Vector<F> zero_vector(int n) {
  return Vector<F>(n, F(0));
}

template <Field F>
Vector<F> basis_vector(int n, int i) {
  Vector<F> v(n, F(0));
  v[i] = F(1);
  return v;
}

template <Field F>
bool is_zero_vector(const Vector<F>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <Field F>
Vector<F> add(Vector<F> a, const Vector<F>& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <Field F>
Vector<F> sub(Vector<F> a, const Vector<F>& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <Field F>
Vector<F> scale(Vector<F> a, const F& s) {
  for (auto& x : a) x *= s;
  return a;
}

/// Bilinear form x^T B y.
template <Field F>
F bilinear(const Matrix<F>& b, const Vector<F>& x, const Vector<F>& y) {
  F s(0);
  for (int i = 0; i < b.rows(); ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < b.cols(); ++j) s += x[i] * b(i, j) * y[j];
  }
  return s;
}

template <Field F>
F max_abs(const Vector<F>& v) {
  F m(0);
  for (const auto& x : v) update_max_abs(m, x);
  return m;
}

// ------------------------------------------------------------ elimination

namespace detail {

template <Field F>
int choose_pivot(const Matrix<F>& m, int col, int from) {
  int best = -1;
  for (int r = from; r < m.rows(); ++r) {
    if (is_zero(m(r, col))) continue;
    if constexpr (ScalarTraits<F>::exact) return r;
    if (best < 0 || abs_value(m(r, col)) > abs_value(m(best, col))) best = r;
  }
  return best;
}

}  // namespace detail

/// Reduced row echelon form; returns pivot columns.
template <Field F>
std::vector<int> rref_in_place(Matrix<F>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    const int p = detail::choose_pivot(m, col, row);
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const F inv = F(1) / m(row, col);
    for (int j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const F f = m(r, col);
      for (int j = 0; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <Field F>
int rank(Matrix<F> m) {
  return int(rref_in_place(m).size());
}

template <Field F>
F determinant(Matrix<F> m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const int n = m.rows();
  F det(1);
  for (int col = 0; col < n; ++col) {
    const int p = detail::choose_pivot(m, col, col);
    if (p < 0) return F(0);
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const F inv = F(1) / m(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      const F f = m(r, col) * inv;
      for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

/// Inverse by Gauss–Jordan; throws std::domain_error on singular input.
template <Field F>
Matrix<F> inverse(const Matrix<F>& a) {
  if (!a.square()) throw DimensionError("inverse of a non-square matrix");
  const int n = a.rows();
  Matrix<F> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = F(1);
  }
  const auto piv = rref_in_place(aug);
  if (int(piv.size()) < n || piv[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  Matrix<F> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Basis of {x : m x = 0}.
template <Field F>
std::vector<Vector<F>> nullspace(Matrix<F> m) {
  const auto piv = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<Vector<F>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(int(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field F>
bool is_symmetric(const Matrix<F>& m) {
  if (!m.square()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (!is_zero(F(m(i, j) - m(j, i)))) return false;
  return true;
}

/// Positive definiteness of a symmetric matrix via the pivots of an LDL^T
/// elimination without row exchanges (all leading minors positive).
template <Field F>
bool is_positive_definite(Matrix<F> m) {
  if (!is_symmetric(m)) return false;
  const int n = m.rows();
  for (int k = 0; k < n; ++k) {
    if (ScalarTraits<F>::sign(m(k, k)) <= 0) return false;
    for (int r = k + 1; r < n; ++r) {
      const F f = m(r, k) / m(k, k);
      for (int j = k; j < n; ++j) m(r, j) -= f * m(k, j);
    }
  }
  return true;
}

// --------------------------------------------------------------- subspaces

/// A subspace of F^n kept as the nonzero rows of a reduced echelon matrix.
template <Field F>
class Subspace {
 public:
  explicit Subspace(int ambient = 0) : ambient_(ambient) {}

  static Subspace span(int ambient, const std::vector<Vector<F>>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Matrix<F> m(int(vectors.size()), ambient);
    for (int r = 0; r < m.rows(); ++r) {
      if (int(vectors[r].size()) != ambient) throw DimensionError("spanning vector of wrong length");
      for (int c = 0; c < ambient; ++c) m(r, c) = vectors[r][c];
    }
    const auto piv = rref_in_place(m);
    for (std::size_t r = 0; r < piv.size(); ++r) s.basis_.push_back(row(m, int(r)));
    return s;
  }

  int ambient() const { return ambient_; }
  int dim() const { return int(basis_.size()); }
  const std::vector<Vector<F>>& basis() const { return basis_; }

  bool contains(const Vector<F>& v) const {
    std::vector<Vector<F>> vs = basis_;
    vs.push_back(v);
    return span(ambient_, vs).dim() == dim();
  }

  bool contains(const Subspace& o) const {
    for (const auto& v : o.basis_)
      if (!contains(v)) return false;
    return true;
  }

 private:
  static Vector<F> row(const Matrix<F>& m, int r) {
    Vector<F> v(m.cols());
    for (int c = 0; c < m.cols(); ++c) v[c] = m(r, c);
    return v;
  }

  int ambient_;
  std::vector<Vector<F>> basis_;
};

}  // namespace hermlie
