#pragma once

// Levi-Civita connection and the canonical Hermitian family nabla^t for a
// left-invariant almost Hermitian structure. For left-invariant fields a
// connection is the table Gamma(i,j,k) = e_k component of nabla_{e_i} e_j.

#include <string>
#include <utility>
#include <vector>

#include "hermlie/forms.hpp"
#include "hermlie/lie_algebra.hpp"
#include "hermlie/structure.hpp"
#include "hermlie/vector_forms.hpp"

namespace hermlie {

template <Field F>
class Connection {
 public:
  Connection() = default;
  Connection(int n, std::string label) : n_(n), label_(std::move(label)), gamma_(std::size_t(n) * n * n, F(0)) {}

  int dim() const { return n_; }
  const std::string& label() const { return label_; }
  F& at(int i, int j, int k) { return gamma_[(std::size_t(i) * n_ + j) * n_ + k]; }
  const F& at(int i, int j, int k) const { return gamma_[(std::size_t(i) * n_ + j) * n_ + k]; }

  /// Matrix of nabla_{e_i}: column j is nabla_{e_i} e_j.
  Matrix<F> operator_matrix(int i) const {
    Matrix<F> m(n_, n_);
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) m(k, j) = at(i, j, k);
    return m;
  }

  /// Matrix of nabla_X.
  Matrix<F> operator_matrix(const Vector<F>& x) const {
    Matrix<F> m(n_, n_);
    for (int i = 0; i < n_; ++i) {
      if (is_zero(x[i])) continue;
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) m(k, j) += x[i] * at(i, j, k);
    }
    return m;
  }

  Vector<F> covariant(const Vector<F>& x, const Vector<F>& y) const { return operator_matrix(x) * y; }

  /// Entrywise equality of the Christoffel tables.
  friend bool operator==(const Connection& a, const Connection& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t q = 0; q < a.gamma_.size(); ++q)
      if (!is_zero(F(a.gamma_[q] - b.gamma_[q]))) return false;
    return true;
  }

  F max_abs_difference(const Connection& o) const {
    F m(0);
    for (std::size_t q = 0; q < gamma_.size(); ++q) update_max_abs(m, F(gamma_[q] - o.gamma_[q]));
    return m;
  }

 private:
  int n_ = 0;
  std::string label_;
  std::vector<F> gamma_;
};

namespace detail {

template <Field F>
using Tensor3 = std::vector<F>;

inline std::size_t t3(int n, int i, int j, int k) { return (std::size_t(i) * n + j) * n + k; }

/// g([e_i, e_j], e_k).
template <Field F>
Tensor3<F> lowered_brackets(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S) {
  const int n = L.dim();
  Tensor3<F> out(std::size_t(n) * n * n, F(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        const F& c = L.c(i, j, m);
        if (is_zero(c)) continue;
        for (int k = 0; k < n; ++k) out[t3(n, i, j, k)] += c * S.g()(m, k);
      }
  return out;
}

/// g(D_{e_i} e_j, e_k) by the Koszul formula.
template <Field F>
Tensor3<F> koszul(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S) {
  const int n = L.dim();
  const auto gb = lowered_brackets(L, S);
  const F half = F(1) / F(2);
  Tensor3<F> out(gb.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        out[t3(n, i, j, k)] = half * (gb[t3(n, i, j, k)] - gb[t3(n, j, k, i)] + gb[t3(n, k, i, j)]);
  return out;
}

/// Gamma from the lowered table g(nabla_{e_i} e_j, e_k).
template <Field F>
Connection<F> raise_connection(const AlmostHermitianStructure<F>& S, const Tensor3<F>& low, std::string label) {
  const int n = S.dim();
  Connection<F> c(n, std::move(label));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a) {
        const F& v = low[t3(n, i, j, a)];
        if (is_zero(v)) continue;
        for (int k = 0; k < n; ++k) c.at(i, j, k) += S.g_inv()(k, a) * v;
      }
  return c;
}

template <Field F>
Tensor3<F> lower_connection(const AlmostHermitianStructure<F>& S, const Connection<F>& c) {
  const int n = S.dim();
  Tensor3<F> low(std::size_t(n) * n * n, F(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a) {
        const F& v = c.at(i, j, a);
        if (is_zero(v)) continue;
        for (int k = 0; k < n; ++k) low[t3(n, i, j, k)] += v * S.g()(a, k);
      }
  return low;
}

}  // namespace detail

template <Field F>
Connection<F> levi_civita(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S) {
  return detail::raise_connection(S, detail::koszul(L, S), "levi-civita");
}

inline std::string t_label(const std::string& prefix, const std::string& t) { return prefix + " t=" + t; }

/// The canonical family
///   g(nabla^t_X Y, Z) = g(D_X Y, Z) + (t-1)/4 (d^c w)^+(X,Y,Z) + (t+1)/4 (d^c w)^+(X,JY,JZ)
///                       - 1/4 g(X, N(Y,Z)) + 1/2 (d^c w)^-(X,Y,Z).
/// N carries the normalisation N(X,Y) = [JX,JY] - [X,Y] - J([JX,Y] + [X,JY]),
/// four times the "1/4"-normalised Nijenhuis tensor; with the coefficient
/// -1/4 the family is Hermitian (nabla g = nabla J = 0) for every t.
///
/// Everything except the t-dependence is computed once.
template <Field F>
class CanonicalFamily {
 public:
  CanonicalFamily(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S) : S_(S), n_(L.dim()) {
    const int n = n_;
    lc_ = detail::koszul(L, S);
    const auto dcw = dc_operator(L, S, fundamental_form(S));
    auto [plus, minus] = plus_minus_split(S, dcw);
    plus_ = to_dense(plus);
    minus_ = to_dense(minus);
    plus_jj_ = contract_slot(contract_slot(plus_, n, 3, 1, S.J()), n, 3, 2, S.J());
    n_low_.assign(std::size_t(n) * n * n, F(0));
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const auto N = nijenhuis(L, S, basis_vector<F>(n, j), basis_vector<F>(n, k));
        const auto gN = S.g() * N;
        for (int i = 0; i < n; ++i) {
          n_low_[detail::t3(n, i, j, k)] = gN[i];
          n_low_[detail::t3(n, i, k, j)] = -gN[i];
        }
      }
  }

  /// g(nabla^t_{e_i} e_j, e_k).
  detail::Tensor3<F> lowered(const F& t) const {
    const F a = (t - F(1)) / F(4);
    const F b = (t + F(1)) / F(4);
    const F q = F(1) / F(4);
    const F h = F(1) / F(2);
    detail::Tensor3<F> low(lc_.size());
    for (std::size_t x = 0; x < low.size(); ++x)
      low[x] = lc_[x] + a * plus_[x] + b * plus_jj_[x] - q * n_low_[x] + h * minus_[x];
    return low;
  }

  Connection<F> connection(const F& t) const {
    return detail::raise_connection(S_, lowered(t), t_label("canonical", to_string(t)));
  }

 private:
  AlmostHermitianStructure<F> S_;
  int n_;
  detail::Tensor3<F> lc_, plus_, plus_jj_, minus_, n_low_;
};

template <Field F>
Connection<F> canonical_connection(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const F& t) {
  return CanonicalFamily<F>(L, S).connection(t);
}

/// The integrable-case formula
///   g(nabla^t_X Y, Z) = g(D_X Y, Z) + (t-1)/4 d^c w(X,Y,Z) + (t+1)/4 d^c w(X,JY,JZ),
/// evaluated as is (meaningful only when N = 0).
template <Field F>
Connection<F> reduced_canonical_connection(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const F& t) {
  const int n = L.dim();
  const auto lc = detail::koszul(L, S);
  const auto dcw = to_dense(dc_operator(L, S, fundamental_form(S)));
  const auto dcw_jj = contract_slot(contract_slot(dcw, n, 3, 1, S.J()), n, 3, 2, S.J());
  const F a = (t - F(1)) / F(4);
  const F b = (t + F(1)) / F(4);
  detail::Tensor3<F> low(lc.size());
  for (std::size_t x = 0; x < low.size(); ++x) low[x] = lc[x] + a * dcw[x] + b * dcw_jj[x];
  return detail::raise_connection(S, low, t_label("reduced", to_string(t)));
}

/// T(X,Y) = nabla_X Y - nabla_Y X - [X,Y].
template <Field F>
VectorTwoForm<F> torsion(const LieAlgebra<F>& L, const Connection<F>& c) {
  const int n = L.dim();
  VectorTwoForm<F> T(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) T.at(i, j, k) = c.at(i, j, k) - c.at(j, i, k) - L.c(i, j, k);
  return T;
}

template <Field F>
struct HermitianCheck {
  F grad_g_norm;
  F grad_J_norm;
  bool hermitian() const { return is_zero(grad_g_norm) && is_zero(grad_J_norm); }
};

/// Max-norms of (nabla_X g)(Y,Z) = -g(nabla_X Y, Z) - g(Y, nabla_X Z) and of
/// (nabla_X J)Y = nabla_X(JY) - J nabla_X Y over basis vectors.
template <Field F>
HermitianCheck<F> hermitian_check(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const Connection<F>& c) {
  const int n = L.dim();
  const auto low = detail::lower_connection(S, c);
  HermitianCheck<F> out{F(0), F(0)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) update_max_abs(out.grad_g_norm, F(low[detail::t3(n, i, j, k)] + low[detail::t3(n, i, k, j)]));
  for (int i = 0; i < n; ++i) {
    const auto M = c.operator_matrix(i);
    update_max_abs(out.grad_J_norm, Matrix<F>(M * S.J() - S.J() * M).max_abs());
  }
  return out;
}

template <Field F>
struct TorsionTypeReport {
  F norm_T11, norm_T20, norm_T02, norm_T11_b, skew_defect;
};

/// Max-norms of the type parts of T, of ((T^{1,1})_b)^{1,1} (the quantity
/// that vanishes for exactly the canonical Hermitian connections), and of the
/// failure of g(T(X,Y),Z) to be a 3-form.
template <Field F>
TorsionTypeReport<F> torsion_type_report(const AlmostHermitianStructure<F>& S, const VectorTwoForm<F>& T) {
  const auto parts = type_split_vv(S, T);
  const auto bc = bc_split(S, parts.b11);
  const auto t11b = type_split_vv(S, bc.b).b11;
  return {parts.b11.max_abs(), parts.b20.max_abs(), parts.b02.max_abs(), t11b.max_abs(), hermlie::skew_defect(S, T)};
}

}  // namespace hermlie
