#pragma once

#include "hermlie/forms.hpp"
#include "hermlie/ricci.hpp"
#include "hermlie/structure.hpp"

namespace hermlie {

struct ClassFlags {
  bool integrable = false;
  bool bi_invariant = false;
  bool anti_bi_invariant = false;
  bool abelian_J = false;
  bool anti_abelian_J = false;
  bool quasi_kahler = false;
  bool almost_kahler = false;
  bool cosymplectic = false;
  bool kahler = false;
};

/// quasi-Kähler means (d omega)^+ = 0, i.e. d omega is of type (3,0)+(0,3).
template <Field F>
bool is_quasi_kahler(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S) {
  return plus_minus_split(S, ce_differential(L, fundamental_form(S))).first.is_zero();
}

template <Field F>
bool is_cosymplectic(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S) {
  return codifferential(L, S, fundamental_form(S)).is_zero();
}

/// d(omega^{m-1}) = 0 with n = 2m.
template <Field F>
bool is_cosymplectic_by_power(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S) {
  const int m = L.dim() / 2;
  if (m < 2) return true;  // omega^0 = 1 is closed
  return ce_differential(L, omega_power(S, m - 1)).is_zero();
}

template <Field F>
ClassFlags class_predicates(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S) {
  ClassFlags f;
  f.integrable = is_integrable(L, S);
  f.bi_invariant = has_class(L, S, StructureClass::bi_invariant);
  f.anti_bi_invariant = has_class(L, S, StructureClass::anti_bi_invariant);
  f.abelian_J = has_class(L, S, StructureClass::abelian);
  f.anti_abelian_J = has_class(L, S, StructureClass::anti_abelian);
  const auto dw = ce_differential(L, fundamental_form(S));
  f.almost_kahler = dw.is_zero();
  f.quasi_kahler = f.almost_kahler || plus_minus_split(S, dw).first.is_zero();
  f.cosymplectic = is_cosymplectic(L, S);
  f.kahler = f.integrable && f.almost_kahler;
  return f;
}

}  // namespace hermlie
