#pragma once

// Almost Hermitian data (g, J) on a Lie algebra, the Nijenhuis tensor and
// unitary frames. Matrices act on column vectors: J e_j = sum_i J(i,j) e_i,
// g(X,Y) = X^T g Y. The fundamental form is omega(X,Y) = g(JX, Y).

#include <stdexcept>
#include <string>
#include <vector>

#include "hermlie/lie_algebra.hpp"
#include "hermlie/linalg.hpp"

namespace hermlie {

class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <Field F>
class AlmostHermitianStructure {
 public:
  AlmostHermitianStructure() = default;

  /// Checks every invariant; throws StructureError naming the first failure.
  static AlmostHermitianStructure validate(Matrix<F> g, Matrix<F> J) {
    const int n = g.rows();
    if (!g.square() || !J.square() || J.rows() != n) throw StructureError("metric and J must be square matrices of the same size");
    if (n % 2 != 0) throw StructureError("odd dimension");
    if (!is_symmetric(g)) throw StructureError("metric not symmetric");
    if (!is_positive_definite(g)) throw StructureError("metric not positive definite");
    const Matrix<F> j2 = J * J;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const F expect = i == k ? F(-1) : F(0);
        if (!is_zero(F(j2(i, k) - expect)))
          throw StructureError("J^2 != -Id at entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) + "): " +
                               to_string(F(j2(i, k))));
      }
    const Matrix<F> jgj = J.transpose() * g * J;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (!is_zero(F(jgj(i, k) - g(i, k))))
          throw StructureError("J not compatible with the metric: g(Je" + std::to_string(i + 1) + ",Je" +
                               std::to_string(k + 1) + ") != g(e" + std::to_string(i + 1) + ",e" + std::to_string(k + 1) + ")");
    return AlmostHermitianStructure(std::move(g), std::move(J));
  }

  int dim() const { return g_.rows(); }
  const Matrix<F>& g() const { return g_; }
  const Matrix<F>& J() const { return j_; }
  const Matrix<F>& g_inv() const { return g_inv_; }
  /// omega(e_i, e_j).
  const Matrix<F>& omega() const { return omega_; }

  F metric(const Vector<F>& x, const Vector<F>& y) const { return bilinear(g_, x, y); }
  Vector<F> apply_J(const Vector<F>& x) const { return j_ * x; }

  template <Field G>
  AlmostHermitianStructure<G> convert() const {
    return AlmostHermitianStructure<G>::validate(g_.template convert<G>(), j_.template convert<G>());
  }

 private:
  AlmostHermitianStructure(Matrix<F> g, Matrix<F> J)
      : g_(std::move(g)), j_(std::move(J)), g_inv_(inverse(g_)), omega_(j_.transpose() * g_) {}

  Matrix<F> g_, j_, g_inv_, omega_;
};

/// J e_{2k} = e_{2k+1}, J e_{2k+1} = -e_{2k} (0-based), i.e. omega = e^12 + e^34 + ...
template <Field F>
Matrix<F> standard_complex_structure(int n) {
  if (n % 2 != 0) throw StructureError("odd dimension");
  Matrix<F> J(n, n);
  for (int k = 0; k < n; k += 2) {
    J(k + 1, k) = F(1);
    J(k, k + 1) = F(-1);
  }
  return J;
}

template <Field F>
AlmostHermitianStructure<F> standard_structure(int n) {
  return AlmostHermitianStructure<F>::validate(Matrix<F>::identity(n), standard_complex_structure<F>(n));
}

template <Field F>
AlmostHermitianStructure<F> validate_structure(const LieAlgebra<F>& L, const Matrix<F>& g, const Matrix<F>& J) {
  if (g.rows() != L.dim() || J.rows() != L.dim())
    throw StructureError("metric/J size " + std::to_string(g.rows()) + " differs from algebra dimension " + std::to_string(L.dim()));
  return AlmostHermitianStructure<F>::validate(g, J);
}

/// N(X,Y) = [JX,JY] - [X,Y] - J([JX,Y] + [X,JY]).
template <Field F>
Vector<F> nijenhuis(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const Vector<F>& x, const Vector<F>& y) {
  const auto jx = S.apply_J(x);
  const auto jy = S.apply_J(y);
  auto out = sub(bracket(L, jx, jy), bracket(L, x, y));
  return sub(out, S.apply_J(add(bracket(L, jx, y), bracket(L, x, jy))));
}

template <Field F>
bool is_integrable(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S) {
  const int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!is_zero_vector(nijenhuis(L, S, basis_vector<F>(n, i), basis_vector<F>(n, j)))) return false;
  return true;
}

/// A g-orthogonal basis e_1, Je_1, ..., e_m, Je_m. The vectors are not
/// normalised (that would need square roots); sq_norm[r] = g(e_r, e_r) =
/// g(Je_r, Je_r) is carried along instead. The unit complex frame is
/// Z_r = (e_r - i Je_r) / sqrt(2 sq_norm[r]).
template <Field F>
struct UnitaryFrame {
  std::vector<Vector<F>> e;
  std::vector<Vector<F>> je;
  std::vector<F> sq_norm;

  int size() const { return int(e.size()); }
};

/// Greedy construction: candidates are `seeds` followed by the standard basis;
/// each candidate is g-orthogonalised against the pairs chosen so far and
/// kept if nonzero. The complement of a J-invariant subspace is J-invariant,
/// so Je_r is automatically orthogonal to everything before it.
template <Field F>
UnitaryFrame<F> unitary_frame(const AlmostHermitianStructure<F>& S, const std::vector<Vector<F>>& seeds = {}) {
  const int n = S.dim();
  UnitaryFrame<F> fr;
  std::vector<Vector<F>> cands = seeds;
  for (int i = 0; i < n; ++i) cands.push_back(basis_vector<F>(n, i));
  for (auto v : cands) {
    if (2 * fr.size() == n) break;
    for (int r = 0; r < fr.size(); ++r) {
      const F a = S.metric(v, fr.e[r]) / fr.sq_norm[r];
      const F b = S.metric(v, fr.je[r]) / fr.sq_norm[r];
      for (int k = 0; k < n; ++k) v[k] -= a * fr.e[r][k] + b * fr.je[r][k];
    }
    const F nv = S.metric(v, v);
    if (is_zero(nv)) continue;
    fr.je.push_back(S.apply_J(v));
    fr.e.push_back(std::move(v));
    fr.sq_norm.push_back(nv);
  }
  return fr;
}

/// Largest violation of g(e_r,e_s) = g(Je_r,Je_s) = delta_rs sq_norm[r],
/// g(e_r, Je_s) = 0, i.e. of g(Z_r, conj Z_s) = delta_rs after normalisation.
template <Field F>
F frame_defect(const AlmostHermitianStructure<F>& S, const UnitaryFrame<F>& fr) {
  F worst(0);
  for (int r = 0; r < fr.size(); ++r)
    for (int s = 0; s < fr.size(); ++s) {
      const F target = r == s ? fr.sq_norm[r] : F(0);
      update_max_abs(worst, F(S.metric(fr.e[r], fr.e[s]) - target));
      update_max_abs(worst, F(S.metric(fr.je[r], fr.je[s]) - target));
      update_max_abs(worst, S.metric(fr.e[r], fr.je[s]));
    }
  return worst;
}

}  // namespace hermlie
