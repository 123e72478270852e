#pragma once

// Curvature, the connection 1-forms theta^t and the Ricci forms rho^t of the
// canonical family. theta^t and rho^t are purely imaginary; they are stored
// through their real parts: theta^t = i*vartheta, rho^t = i*rho_hat.
//
// Sign convention for d*omega. The closed forms in this header contain the
// term "g(d*omega, X^flat)". Evaluated against the curvature of nabla^t, they
// hold exactly when that term is
//     codiff_pairing(X) = -<omega, d X^flat> = -<d*_alg omega, X^flat>,
// i.e. with d* taken as minus the formal adjoint of d. codifferential() in
// forms.hpp is the adjoint itself, so in terms of it the 2-step Ricci form is
// rho_hat^t = -1/2 (1-t) g(delta omega, [X,Y]^flat).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermlie/connection.hpp"
#include "hermlie/forms.hpp"
#include "hermlie/lie_algebra.hpp"
#include "hermlie/structure.hpp"

namespace hermlie {

/// Ratio between the curvature-trace route and the d(vartheta) route:
/// ricci_via_curvature = kRicciRouteRatio * ricci_via_theta. Calibrated on a
/// non-flat structure on the 3-step algebra (0,0,12,13); see calibrate_ratio.
inline constexpr int kRicciRouteRatio = 1;

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two routes that must agree do not.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <Field F>
struct Theta {
  KForm<F> vartheta;
  F t;
};

template <Field F>
struct RicciForm {
  KForm<F> rho_hat;
  F t;
  bool is_zero() const { return rho_hat.is_zero(); }
};

/// R(X,Y) = [nabla_X, nabla_Y] - nabla_{[X,Y]} as a matrix.
template <Field F>
Matrix<F> curvature(const LieAlgebra<F>& L, const Connection<F>& c, const Vector<F>& x, const Vector<F>& y) {
  const auto mx = c.operator_matrix(x);
  const auto my = c.operator_matrix(y);
  return mx * my - my * mx - c.operator_matrix(bracket(L, x, y));
}

namespace detail {

template <Field F>
void require_hermitian(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const Connection<F>& c) {
  const auto h = hermitian_check(L, S, c);
  if (!h.hermitian())
    throw PreconditionError("connection '" + c.label() + "' is not Hermitian (|nabla g| = " + to_string(h.grad_g_norm) +
                            ", |nabla J| = " + to_string(h.grad_J_norm) + ")");
}

}  // namespace detail

/// rho_hat(X,Y) = Im tr R(X,Y)|_{T^{1,0}} = sum_r g(R(X,Y) e_r, J e_r) / |e_r|^2
/// over a unitary frame. The real part of the trace,
/// sum_r (g(R e_r, e_r) + g(R Je_r, Je_r)) / (2|e_r|^2), vanishes for a metric
/// connection and is checked.
template <Field F>
RicciForm<F> ricci_via_curvature(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const Connection<F>& c,
                                 const F& t = F(0)) {
  detail::require_hermitian(L, S, c);
  const int n = L.dim();
  const auto fr = unitary_frame(S);
  std::vector<Matrix<F>> M(n);
  for (int i = 0; i < n; ++i) M[i] = c.operator_matrix(i);
  RicciForm<F> out{KForm<F>(n, 2), t};
  for (std::size_t q = 0; q < out.rho_hat.size(); ++q) {
    const auto idx = detail::mask_indices(out.rho_hat.mask(q));
    const int i = idx[0], j = idx[1];
    Matrix<F> R = M[i] * M[j] - M[j] * M[i];
    for (int k = 0; k < n; ++k)
      if (!is_zero(L.c(i, j, k))) R -= M[k] * L.c(i, j, k);
    F im(0), re(0);
    for (int r = 0; r < fr.size(); ++r) {
      const auto Re = R * fr.e[r];
      const auto Rje = R * fr.je[r];
      im += S.metric(Re, fr.je[r]) / fr.sq_norm[r];
      re += (S.metric(Re, fr.e[r]) + S.metric(Rje, fr.je[r])) / fr.sq_norm[r];
    }
    if (!is_zero(re)) throw ConsistencyError("curvature trace has a nonzero real part");
    out.rho_hat[q] = im;
  }
  return out;
}

/// vartheta(X) = Im sum_r g(nabla_X Z_r, conj Z_r) = sum_r g(nabla_X e_r, J e_r) / |e_r|^2.
template <Field F>
Theta<F> theta_connection(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const Connection<F>& c,
                          const F& t = F(0)) {
  detail::require_hermitian(L, S, c);
  const int n = L.dim();
  const auto fr = unitary_frame(S);
  Theta<F> out{KForm<F>(n, 1), t};
  for (int i = 0; i < n; ++i) {
    const auto M = c.operator_matrix(i);
    F im(0), re(0);
    for (int r = 0; r < fr.size(); ++r) {
      im += S.metric(M * fr.e[r], fr.je[r]) / fr.sq_norm[r];
      re += (S.metric(M * fr.e[r], fr.e[r]) + S.metric(M * fr.je[r], fr.je[r])) / fr.sq_norm[r];
    }
    if (!is_zero(re)) throw ConsistencyError("theta of a metric connection has a nonzero real part");
    out.vartheta[i] = im;
  }
  return out;
}

/// The 1-form X -> g(d*omega, X^flat) in the convention of the closed forms
/// (see the header comment): -<d*_alg omega, X^flat>.
template <Field F>
KForm<F> codiff_pairing(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S) {
  return -adjoint_differential(L, S, fundamental_form(S));
}

namespace detail {

template <Field F>
struct Complex {
  F re, im;
};

template <Field F>
struct CVector {
  Vector<F> re, im;
};

template <Field F>
CVector<F> cbracket(const LieAlgebra<F>& L, const CVector<F>& x, const CVector<F>& y) {
  return {sub(bracket(L, x.re, y.re), bracket(L, x.im, y.im)), add(bracket(L, x.re, y.im), bracket(L, x.im, y.re))};
}

/// Complex-bilinear extension of g.
template <Field F>
Complex<F> cmetric(const AlmostHermitianStructure<F>& S, const CVector<F>& x, const CVector<F>& y) {
  return {S.metric(x.re, y.re) - S.metric(x.im, y.im), S.metric(x.re, y.im) + S.metric(x.im, y.re)};
}

/// sum_r Im g([W, Z_r], conj Z_r) for a complex vector W, with the unit
/// frame Z_r = (e_r - i Je_r) / sqrt(2|e_r|^2).
template <Field F>
F frame_bracket_sum(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const UnitaryFrame<F>& fr,
                    const CVector<F>& w) {
  F acc(0);
  for (int r = 0; r < fr.size(); ++r) {
    const CVector<F> z{fr.e[r], scale(fr.je[r], F(-1))};
    const CVector<F> zbar{fr.e[r], fr.je[r]};
    acc += cmetric(S, cbracket(L, w, z), zbar).im / (F(2) * fr.sq_norm[r]);
  }
  return acc;
}

}  // namespace detail

/// vartheta^t(X) = sum_r Im g([X + t i JX, Z_r], conj Z_r) + 1/2 (t-1) g(d*omega, X^flat),
/// evaluated with complexified brackets in a unitary frame.
template <Field F>
Theta<F> theta_complex(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const F& t,
                       const std::vector<Vector<F>>& frame_seeds = {}) {
  const int n = L.dim();
  const auto fr = unitary_frame(S, frame_seeds);
  const auto pairing = codiff_pairing(L, S);
  const F half = F(1) / F(2);
  Theta<F> out{KForm<F>(n, 1), t};
  for (int i = 0; i < n; ++i) {
    const auto x = basis_vector<F>(n, i);
    const detail::CVector<F> w{x, scale(S.apply_J(x), t)};
    out.vartheta[i] = detail::frame_bracket_sum(L, S, fr, w) + half * (t - F(1)) * pairing[i];
  }
  return out;
}

/// The real-frame version:
/// vartheta^t(X) = 1/2 sum_r { g([X,e_r],Je_r) - g([X,Je_r],e_r) + t g([JX,e_r],e_r)
///                 + t g([JX,Je_r],Je_r) } / |e_r|^2 + 1/2 (t-1) g(d*omega, X^flat).
template <Field F>
Theta<F> theta_real(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const F& t) {
  const int n = L.dim();
  const auto fr = unitary_frame(S);
  const auto pairing = codiff_pairing(L, S);
  const F half = F(1) / F(2);
  Theta<F> out{KForm<F>(n, 1), t};
  for (int i = 0; i < n; ++i) {
    const auto x = basis_vector<F>(n, i);
    const auto jx = S.apply_J(x);
    F acc(0);
    for (int r = 0; r < fr.size(); ++r) {
      const auto& e = fr.e[r];
      const auto& je = fr.je[r];
      acc += (S.metric(bracket(L, x, e), je) - S.metric(bracket(L, x, je), e) + t * S.metric(bracket(L, jx, e), e) +
              t * S.metric(bracket(L, jx, je), je)) /
             fr.sq_norm[r];
    }
    out.vartheta[i] = half * acc + half * (t - F(1)) * pairing[i];
  }
  return out;
}

/// The trace formula:
/// vartheta^t(X) = 1/2 { -tr(ad_X o J) + t tr ad_{JX} + (t-1) g(d*omega, X^flat) }.
template <Field F>
Theta<F> theta_trace(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const F& t) {
  const int n = L.dim();
  const auto pairing = codiff_pairing(L, S);
  const auto tau = ad_traces(L);
  const F half = F(1) / F(2);
  Theta<F> out{KForm<F>(n, 1), t};
  for (int i = 0; i < n; ++i) {
    const auto x = basis_vector<F>(n, i);
    const F tr_adJ = Matrix<F>(ad_matrix(L, x) * S.J()).trace();
    F tr_adJX(0);
    for (int k = 0; k < n; ++k) tr_adJX += S.J()(k, i) * tau[k];
    out.vartheta[i] = half * (-tr_adJ + t * tr_adJX + (t - F(1)) * pairing[i]);
  }
  return out;
}

/// The three special cases t = 1, 0, -1 written with X^{0,1} = 1/2(X + iJX)
/// and X^{1,0} = 1/2(X - iJX):
///   t =  1: 2 sum Im g([X^{0,1}, Z_r], conj Z_r)
///   t =  0: sum Im g([X, Z_r], conj Z_r) - 1/2 g(d*omega, X^flat)
///   t = -1: 2 sum Im g([X^{1,0}, Z_r], conj Z_r) - g(d*omega, X^flat)
template <Field F>
Theta<F> theta_special(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, int t) {
  if (t < -1 || t > 1) throw std::invalid_argument("theta_special: t must be -1, 0 or 1");
  const int n = L.dim();
  const auto fr = unitary_frame(S);
  const auto pairing = codiff_pairing(L, S);
  const F half = F(1) / F(2);
  Theta<F> out{KForm<F>(n, 1), F(t)};
  for (int i = 0; i < n; ++i) {
    const auto x = basis_vector<F>(n, i);
    const auto jx = S.apply_J(x);
    if (t == 0) {
      out.vartheta[i] = detail::frame_bracket_sum(L, S, fr, detail::CVector<F>{x, zero_vector<F>(n)}) - half * pairing[i];
    } else {
      const detail::CVector<F> w{scale(x, half), scale(jx, t == 1 ? half : F(-half))};
      out.vartheta[i] = F(2) * detail::frame_bracket_sum(L, S, fr, w) - (t == 1 ? F(0) : pairing[i]);
    }
  }
  return out;
}

/// d vartheta, i.e. (X, Y) -> -vartheta([X, Y]).
template <Field F>
RicciForm<F> ricci_from_theta(const LieAlgebra<F>& L, const Theta<F>& th) {
  return {ce_differential(L, th.vartheta), th.t};
}

/// rho_hat(X,Y) = 1/2 tr(ad_{[X,Y]} o J) - 1/2 (t-1) g(d*omega, [X,Y]^flat)
/// (the unimodular closed form).
template <Field F>
RicciForm<F> ricci_unimodular_closed_form(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const F& t) {
  const int n = L.dim();
  const auto pairing = codiff_pairing(L, S);
  const F half = F(1) / F(2);
  RicciForm<F> out{KForm<F>(n, 2), t};
  for (std::size_t q = 0; q < out.rho_hat.size(); ++q) {
    const auto idx = detail::mask_indices(out.rho_hat.mask(q));
    const auto b = basis_bracket(L, idx[0], idx[1]);
    const F tr = Matrix<F>(ad_matrix(L, b) * S.J()).trace();
    F p(0);
    for (int k = 0; k < n; ++k) p += b[k] * pairing[k];
    out.rho_hat[q] = half * tr - half * (t - F(1)) * p;
  }
  return out;
}

/// rho_hat^t = d vartheta^t from the trace formula. On unimodular algebras
/// the result is checked against ricci_unimodular_closed_form.
template <Field F>
RicciForm<F> ricci_via_theta(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const F& t) {
  auto rho = ricci_from_theta(L, theta_trace(L, S, t));
  if (is_unimodular(L) && !(rho.rho_hat == ricci_unimodular_closed_form(L, S, t).rho_hat))
    throw ConsistencyError("d(theta) differs from the unimodular closed form");
  return rho;
}

/// rho_hat^t(X,Y) = 1/2 (1-t) g(d*omega, [X,Y]^flat), for 2-step nilpotent
/// (or abelian) algebras only.
template <Field F>
RicciForm<F> two_step_ricci(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const F& t) {
  if (!is_abelian(L) && !is_two_step(L)) throw PreconditionError("two_step_ricci: algebra is not 2-step nilpotent");
  const int n = L.dim();
  const auto pairing = codiff_pairing(L, S);
  const F half = F(1) / F(2);
  RicciForm<F> out{KForm<F>(n, 2), t};
  for (std::size_t q = 0; q < out.rho_hat.size(); ++q) {
    const auto idx = detail::mask_indices(out.rho_hat.mask(q));
    F p(0);
    for (int k = 0; k < n; ++k) p += L.c(idx[0], idx[1], k) * pairing[k];
    out.rho_hat[q] = half * (F(1) - t) * p;
  }
  return out;
}

enum class StructureClass { bi_invariant, anti_bi_invariant, abelian, anti_abelian };

inline std::string to_string(StructureClass c) {
  switch (c) {
    case StructureClass::bi_invariant: return "bi_invariant";
    case StructureClass::anti_bi_invariant: return "anti_bi_invariant";
    case StructureClass::abelian: return "abelian_J";
    case StructureClass::anti_abelian: return "anti_abelian_J";
  }
  return "?";
}

/// [JX, Y] = s J[X, Y] for basis vectors (s = 1 bi-invariant, -1 anti).
template <Field F>
bool bracket_commutes_with_J(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, int s) {
  const int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto x = basis_vector<F>(n, i), y = basis_vector<F>(n, j);
      auto lhs = bracket(L, S.apply_J(x), y);
      auto rhs = scale(S.apply_J(bracket(L, x, y)), F(s));
      if (!is_zero_vector(sub(lhs, rhs))) return false;
    }
  return true;
}

/// [JX, JY] = s [X, Y] for basis vectors (s = 1 abelian, -1 anti-abelian).
template <Field F>
bool bracket_preserved_by_J(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, int s) {
  const int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto x = basis_vector<F>(n, i), y = basis_vector<F>(n, j);
      auto lhs = bracket(L, S.apply_J(x), S.apply_J(y));
      auto rhs = scale(bracket(L, x, y), F(s));
      if (!is_zero_vector(sub(lhs, rhs))) return false;
    }
  return true;
}

template <Field F>
bool has_class(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, StructureClass c) {
  switch (c) {
    case StructureClass::bi_invariant: return bracket_commutes_with_J(L, S, 1);
    case StructureClass::anti_bi_invariant: return bracket_commutes_with_J(L, S, -1);
    case StructureClass::abelian: return bracket_preserved_by_J(L, S, 1);
    case StructureClass::anti_abelian: return bracket_preserved_by_J(L, S, -1);
  }
  return false;
}

/// The class-specific closed forms:
///   bi-invariant       (1-t) tr ad_{[JX,Y]}
///   anti-bi-invariant  0
///   abelian            1/2 { -(1+t) tr ad_{J[X,Y]} + (1-t) g(d*omega, [X,Y]^flat) }
///   anti-abelian       -1/2 (1+t) tr ad_{J[X,Y]}
/// Every result is checked against ricci_via_theta.
template <Field F>
RicciForm<F> class_formula_ricci(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const F& t,
                                 StructureClass cls) {
  if (!has_class(L, S, cls)) throw PreconditionError("class_formula_ricci: structure is not " + to_string(cls));
  const int n = L.dim();
  const auto tau = ad_traces(L);
  const auto pairing = codiff_pairing(L, S);
  const F half = F(1) / F(2);
  auto tr_ad = [&](const Vector<F>& v) {
    F s(0);
    for (int k = 0; k < n; ++k) s += v[k] * tau[k];
    return s;
  };
  RicciForm<F> out{KForm<F>(n, 2), t};
  for (std::size_t q = 0; q < out.rho_hat.size(); ++q) {
    const auto idx = detail::mask_indices(out.rho_hat.mask(q));
    const auto x = basis_vector<F>(n, idx[0]), y = basis_vector<F>(n, idx[1]);
    const auto xy = bracket(L, x, y);
    F v(0);
    switch (cls) {
      case StructureClass::bi_invariant:
        v = (F(1) - t) * tr_ad(bracket(L, S.apply_J(x), y));
        break;
      case StructureClass::anti_bi_invariant:
        break;
      case StructureClass::abelian: {
        F p(0);
        for (int k = 0; k < n; ++k) p += xy[k] * pairing[k];
        v = half * (-(F(1) + t) * tr_ad(S.apply_J(xy)) + (F(1) - t) * p);
        break;
      }
      case StructureClass::anti_abelian:
        v = -half * (F(1) + t) * tr_ad(S.apply_J(xy));
        break;
    }
    out.rho_hat[q] = v;
  }
  if (!(out.rho_hat == ricci_via_theta(L, S, t).rho_hat))
    throw ConsistencyError("class formula (" + to_string(cls) + ") differs from d(theta)");
  return out;
}

/// Common ratio a/b of two forms, if a = r*b entrywise for one scalar r
/// (nullopt when b = 0 or the forms are not proportional).
template <Field F>
std::optional<F> calibrate_ratio(const KForm<F>& a, const KForm<F>& b) {
  std::optional<F> r;
  for (std::size_t q = 0; q < b.size(); ++q) {
    if (is_zero(b[q])) continue;
    r = a[q] / b[q];
    break;
  }
  if (!r) return std::nullopt;
  if (!((a - b * *r).is_zero())) return std::nullopt;
  return r;
}

}  // namespace hermlie
