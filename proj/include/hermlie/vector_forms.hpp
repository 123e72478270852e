#pragma once

// Vector-valued 2-forms B(X, Y) (torsion tensors and the like), stored as a
// dense n^3 array: at(i, j, k) is the e_k component of B(e_i, e_j).

#include <vector>

#include "hermlie/linalg.hpp"
#include "hermlie/structure.hpp"

namespace hermlie {

template <Field F>
class VectorTwoForm {
 public:
  VectorTwoForm() = default;
  explicit VectorTwoForm(int n) : n_(n), b_(std::size_t(n) * n * n, F(0)) {}

  int dim() const { return n_; }
  F& at(int i, int j, int k) { return b_[(std::size_t(i) * n_ + j) * n_ + k]; }
  const F& at(int i, int j, int k) const { return b_[(std::size_t(i) * n_ + j) * n_ + k]; }

  Vector<F> value(int i, int j) const {
    Vector<F> v(n_);
    for (int k = 0; k < n_; ++k) v[k] = at(i, j, k);
    return v;
  }

  VectorTwoForm& operator+=(const VectorTwoForm& o) {
    for (std::size_t q = 0; q < b_.size(); ++q) b_[q] += o.b_[q];
    return *this;
  }
  VectorTwoForm& operator-=(const VectorTwoForm& o) {
    for (std::size_t q = 0; q < b_.size(); ++q) b_[q] -= o.b_[q];
    return *this;
  }
  VectorTwoForm& operator*=(const F& s) {
    for (auto& x : b_) x *= s;
    return *this;
  }
  friend VectorTwoForm operator+(VectorTwoForm a, const VectorTwoForm& b) { return a += b; }
  friend VectorTwoForm operator-(VectorTwoForm a, const VectorTwoForm& b) { return a -= b; }
  friend VectorTwoForm operator*(VectorTwoForm a, const F& s) { return a *= s; }

  F max_abs() const {
    F m(0);
    for (const auto& x : b_) update_max_abs(m, x);
    return m;
  }
  bool is_zero() const { return hermlie::is_zero(max_abs()); }

  /// Largest |B(X,Y) + B(Y,X)| entry; zero for a genuine 2-form.
  F antisymmetry_defect() const {
    F m(0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) update_max_abs(m, F(at(i, j, k) + at(j, i, k)));
    return m;
  }

 private:
  int n_ = 0;
  std::vector<F> b_;
};

/// g(B(e_i, e_j), e_k) as an n^3 array (same layout as VectorTwoForm).
template <Field F>
VectorTwoForm<F> lower_index(const AlmostHermitianStructure<F>& S, const VectorTwoForm<F>& B) {
  const int n = B.dim();
  VectorTwoForm<F> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a) {
        const F& v = B.at(i, j, a);
        if (is_zero(v)) continue;
        for (int k = 0; k < n; ++k) out.at(i, j, k) += v * S.g()(a, k);
      }
  return out;
}

template <Field F>
VectorTwoForm<F> raise_index(const AlmostHermitianStructure<F>& S, const VectorTwoForm<F>& low) {
  const int n = low.dim();
  VectorTwoForm<F> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a) {
        const F& v = low.at(i, j, a);
        if (is_zero(v)) continue;
        for (int k = 0; k < n; ++k) out.at(i, j, k) += S.g_inv()(k, a) * v;
      }
  return out;
}

/// (X, Y) -> B(JX, JY).
template <Field F>
VectorTwoForm<F> pull_JJ(const AlmostHermitianStructure<F>& S, const VectorTwoForm<F>& B) {
  const int n = B.dim();
  const auto& J = S.J();
  VectorTwoForm<F> half(n), out(n);
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < n; ++j)
      for (int b = 0; b < n; ++b) {
        if (is_zero(J(b, j))) continue;
        for (int k = 0; k < n; ++k) half.at(a, j, k) += J(b, j) * B.at(a, b, k);
      }
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a) {
      if (is_zero(J(a, i))) continue;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) out.at(i, j, k) += J(a, i) * half.at(a, j, k);
    }
  return out;
}

/// (X, Y) -> J B(JX, Y).
template <Field F>
VectorTwoForm<F> j_after_pull_J_first(const AlmostHermitianStructure<F>& S, const VectorTwoForm<F>& B) {
  const int n = B.dim();
  const auto& J = S.J();
  VectorTwoForm<F> out(n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a) {
      if (is_zero(J(a, i))) continue;
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < n; ++b) {
          const F v = J(a, i) * B.at(a, j, b);
          if (is_zero(v)) continue;
          for (int k = 0; k < n; ++k) out.at(i, j, k) += J(k, b) * v;
        }
    }
  return out;
}

template <Field F>
struct TypeParts {
  VectorTwoForm<F> b20, b11, b02;
};

/// B = B^{2,0} + B^{1,1} + B^{0,2} with B^{1,1}(JX,JY) = B^{1,1}(X,Y),
/// and on the remainder R (R(JX,JY) = -R(X,Y)):
///   B^{2,0}(JX, Y) = J B^{2,0}(X, Y),  B^{0,2}(JX, Y) = -J B^{0,2}(X, Y).
/// B^{2,0} is complex bilinear (values in T^{1,0} on (1,0)-vectors); B^{0,2}
/// sends pairs of (1,0)-vectors into T^{0,1} (where the Nijenhuis tensor lives).
template <Field F>
TypeParts<F> type_split_vv(const AlmostHermitianStructure<F>& S, const VectorTwoForm<F>& B) {
  const F half = F(1) / F(2);
  const auto bjj = pull_JJ(S, B);
  TypeParts<F> out;
  out.b11 = (B + bjj) * half;
  const auto rem = (B - bjj) * half;
  const auto jr = j_after_pull_J_first(S, rem);
  out.b20 = (rem - jr) * half;
  out.b02 = (rem + jr) * half;
  return out;
}

template <Field F>
struct BcParts {
  VectorTwoForm<F> b, c;
};

/// g(B_b(X,Y),Z) = 1/2 (B(X,Y,Z) - B(Z,X,Y) - B(Y,Z,X)),
/// g(B_c(X,Y),Z) = 1/2 (B(X,Y,Z) + B(Z,X,Y) + B(Y,Z,X)),
/// where B(X,Y,Z) = g(B(X,Y),Z).
template <Field F>
BcParts<F> bc_split(const AlmostHermitianStructure<F>& S, const VectorTwoForm<F>& B) {
  const int n = B.dim();
  const auto low = lower_index(S, B);
  const F half = F(1) / F(2);
  VectorTwoForm<F> lb(n), lc(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const F cyc = low.at(z, x, y) + low.at(y, z, x);
        lb.at(x, y, z) = half * (low.at(x, y, z) - cyc);
        lc.at(x, y, z) = half * (low.at(x, y, z) + cyc);
      }
  return {raise_index(S, lb), raise_index(S, lc)};
}

/// Largest deviation of g(B(X,Y),Z) from being alternating in (X,Y,Z).
template <Field F>
F skew_defect(const AlmostHermitianStructure<F>& S, const VectorTwoForm<F>& B) {
  const auto low = lower_index(S, B);
  const int n = B.dim();
  F m(0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        update_max_abs(m, F(low.at(x, y, z) + low.at(y, x, z)));
        update_max_abs(m, F(low.at(x, y, z) + low.at(x, z, y)));
      }
  return m;
}

}  // namespace hermlie
