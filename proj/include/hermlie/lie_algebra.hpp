#pragma once

// Real Lie algebras given by structure constants in a fixed basis e_0..e_{n-1}
// (0-based in code; the text notation is 1-based). c(i,j,k) is the
// coefficient of e_k in [e_i, e_j].

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermlie/linalg.hpp"
#include "hermlie/scalar.hpp"

namespace hermlie {

class JacobiError : public std::invalid_argument {
 public:
  JacobiError(const std::string& what, std::string defect)
      : std::invalid_argument(what), defect_(std::move(defect)) {}
  const std::string& defect() const { return defect_; }

 private:
  std::string defect_;
};

template <Field F>
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Zero brackets.
  static LieAlgebra abelian(int n) { return LieAlgebra(n, std::vector<F>(std::size_t(n) * n * n, F(0))); }

  /// Wraps a tensor without checking antisymmetry or Jacobi. Used to build
  /// candidates that are validated afterwards, and in tests of the checks.
  static LieAlgebra unchecked(int n, std::vector<F> c) {
    if (n <= 0) throw DimensionError("Lie algebra dimension must be positive");
    if (c.size() != std::size_t(n) * n * n) throw DimensionError("structure tensor has wrong size");
    return LieAlgebra(n, std::move(c));
  }

  /// Checked construction: antisymmetry and the Jacobi identity must hold.
  static LieAlgebra from_constants(int n, std::vector<F> c);

  int dim() const { return n_; }

  const F& c(int i, int j, int k) const { return c_[idx(i, j, k)]; }

  /// Sets c(i,j,k) = v and c(j,i,k) = -v.
  void set_bracket_coefficient(int i, int j, int k, const F& v) {
    c_[idx(i, j, k)] = v;
    c_[idx(j, i, k)] = -v;
  }

  const std::vector<F>& constants() const { return c_; }

  template <Field G>
  LieAlgebra<G> convert() const {
    std::vector<G> c(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if constexpr (std::is_same_v<F, G>)
        c[k] = c_[k];
      else
        c[k] = from_rational<G>(c_[k]);
    }
    return LieAlgebra<G>::unchecked(n_, std::move(c));
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k)
      if (!is_zero(F(a.c_[k] - b.c_[k]))) return false;
    return true;
  }

 private:
  LieAlgebra(int n, std::vector<F> c) : n_(n), c_(std::move(c)) {}
  std::size_t idx(int i, int j, int k) const { return (std::size_t(i) * n_ + j) * n_ + k; }

  int n_ = 0;
  std::vector<F> c_;
};

template <Field F>
Vector<F> bracket(const LieAlgebra<F>& L, const Vector<F>& x, const Vector<F>& y) {
  const int n = L.dim();
  if (int(x.size()) != n || int(y.size()) != n) throw DimensionError("bracket: vector length differs from algebra dimension");
  Vector<F> out(n, F(0));
  for (int i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      const F xy = x[i] * y[j];
      for (int k = 0; k < n; ++k) out[k] += xy * L.c(i, j, k);
    }
  }
  return out;
}

/// [e_i, e_j] as a vector.
template <Field F>
Vector<F> basis_bracket(const LieAlgebra<F>& L, int i, int j) {
  Vector<F> out(L.dim());
  for (int k = 0; k < L.dim(); ++k) out[k] = L.c(i, j, k);
  return out;
}

/// Matrix of Y -> [X, Y]; column j is [X, e_j].
template <Field F>
Matrix<F> ad_matrix(const LieAlgebra<F>& L, const Vector<F>& x) {
  const int n = L.dim();
  if (int(x.size()) != n) throw DimensionError("ad_matrix: vector length differs from algebra dimension");
  Matrix<F> m(n, n);
  for (int i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m(k, j) += x[i] * L.c(i, j, k);
  }
  return m;
}

/// The 1-form X -> tr ad_X, as the vector of its values on the basis.
template <Field F>
Vector<F> ad_traces(const LieAlgebra<F>& L) {
  const int n = L.dim();
  Vector<F> tau(n, F(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tau[i] += L.c(i, j, j);
  return tau;
}

/// Largest entry (in absolute value) of any cyclic sum
/// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
template <Field F>
F jacobi_defect(const LieAlgebra<F>& L) {
  const int n = L.dim();
  F worst(0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          F s(0);
          for (int m = 0; m < n; ++m)
            s += L.c(i, j, m) * L.c(m, k, l) + L.c(j, k, m) * L.c(m, i, l) + L.c(k, i, m) * L.c(m, j, l);
          update_max_abs(worst, s);
        }
  return worst;
}

template <Field F>
LieAlgebra<F> LieAlgebra<F>::from_constants(int n, std::vector<F> c) {
  LieAlgebra L = unchecked(n, std::move(c));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!is_zero(F(L.c(i, j, k) + L.c(j, i, k))))
          throw std::invalid_argument("structure constants are not antisymmetric at (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
  // Report the first failing triple, 1-based, for diagnostics.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          F s(0);
          for (int m = 0; m < n; ++m)
            s += L.c(i, j, m) * L.c(m, k, l) + L.c(j, k, m) * L.c(m, i, l) + L.c(k, i, m) * L.c(m, j, l);
          if (!is_zero(s)) {
            const std::string where = "Jacobi identity fails for (e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                                      ",e" + std::to_string(k + 1) + "): component e" + std::to_string(l + 1) +
                                      " of the cyclic sum is " + to_string(s);
            throw JacobiError(where + " (defect " + to_string(jacobi_defect(L)) + ")", to_string(jacobi_defect(L)));
          }
        }
  return L;
}

template <Field F>
bool is_unimodular(const LieAlgebra<F>& L) {
  return is_zero_vector(ad_traces(L));
}

/// [A, B] for subspaces, as a subspace.
template <Field F>
Subspace<F> bracket_span(const LieAlgebra<F>& L, const Subspace<F>& a, const Subspace<F>& b) {
  std::vector<Vector<F>> vs;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      auto v = bracket(L, x, y);
      if (!is_zero_vector(v)) vs.push_back(std::move(v));
    }
  return Subspace<F>::span(L.dim(), vs);
}

template <Field F>
Subspace<F> whole_space(int n) {
  std::vector<Vector<F>> vs;
  for (int i = 0; i < n; ++i) vs.push_back(basis_vector<F>(n, i));
  return Subspace<F>::span(n, vs);
}

template <Field F>
Subspace<F> derived_algebra(const LieAlgebra<F>& L) {
  const auto g = whole_space<F>(L.dim());
  return bracket_span(L, g, g);
}

/// {X : [X, e_j] = 0 for all j}.
template <Field F>
Subspace<F> center(const LieAlgebra<F>& L) {
  const int n = L.dim();
  Matrix<F> m(n * n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) m(j * n + k, i) = L.c(i, j, k);
  return Subspace<F>::span(n, nullspace(m));
}

/// Dimensions of g, [g,g], [g,[g,g]], ... until the series stabilises.
template <Field F>
std::vector<int> lower_central_series(const LieAlgebra<F>& L) {
  const auto g = whole_space<F>(L.dim());
  std::vector<int> dims{g.dim()};
  Subspace<F> cur = g;
  while (cur.dim() > 0) {
    Subspace<F> next = bracket_span(L, g, cur);
    if (next.dim() == cur.dim()) break;
    dims.push_back(next.dim());
    cur = std::move(next);
  }
  return dims;
}

/// Number of nonzero terms of the lower central series before it reaches 0
/// (abelian = 1), or nullopt if the algebra is not nilpotent.
template <Field F>
std::optional<int> nilpotency_step(const LieAlgebra<F>& L) {
  const auto dims = lower_central_series(L);
  if (dims.back() != 0) return std::nullopt;
  return int(dims.size()) - 1;
}

template <Field F>
bool is_abelian(const LieAlgebra<F>& L) {
  for (const auto& x : L.constants())
    if (!is_zero(x)) return false;
  return true;
}

template <Field F>
bool is_two_step(const LieAlgebra<F>& L) {
  if (is_abelian(L)) return false;
  return center(L).contains(derived_algebra(L));
}

}  // namespace hermlie
