#pragma once

// Named example structures and generators for the four bracket/J classes.

#include <string>
#include <vector>

#include "hermlie/notation.hpp"
#include "hermlie/random.hpp"
#include "hermlie/ricci.hpp"
#include "hermlie/vector_forms.hpp"

namespace hermlie {

namespace detail {

inline Matrix<Rational> complex_structure_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  // each (a, b), 1-based: J e_a = e_b, J e_b = -e_a
  Matrix<Rational> J(n, n);
  for (auto [a, b] : pairs) {
    J(b - 1, a - 1) = 1;
    J(a - 1, b - 1) = -1;
  }
  return J;
}

inline Instance make_instance(std::string name, const std::string& notation, const Matrix<Rational>& J,
                              const Matrix<Rational>* g = nullptr) {
  auto L = parse_notation(notation);
  const auto G = g ? *g : Matrix<Rational>::identity(L.dim());
  auto S = validate_structure(L, G, J);
  return {std::move(name), std::move(L), std::move(S)};
}

/// (x, y) -> B(y, x)
inline VectorTwoForm<Rational> swap_args(const VectorTwoForm<Rational>& B) {
  const int n = B.dim();
  VectorTwoForm<Rational> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out.at(i, j, k) = B.at(j, i, k);
  return out;
}

inline VectorTwoForm<Rational> antisymmetrize(const VectorTwoForm<Rational>& B) {
  return (B - swap_args(B)) * Rational(1, 2);
}

/// Projection of bracket tensors onto the subspace of a class:
///   abelian       1/2 (B + B(J.,J.))
///   anti-abelian  1/2 (B - B(J.,J.))
///   (anti-)bi-invariant: make each slot complex (anti)linear,
///                 B -> 1/2 (B -/+ J B(J.,.)), same in the second slot,
///                 then antisymmetrise.
inline VectorTwoForm<Rational> project_to_class(const AlmostHermitianStructure<Rational>& S,
                                                const VectorTwoForm<Rational>& B, StructureClass cls) {
  const Rational half(1, 2);
  switch (cls) {
    case StructureClass::abelian: return (B + pull_JJ(S, B)) * half;
    case StructureClass::anti_abelian: return (B - pull_JJ(S, B)) * half;
    case StructureClass::bi_invariant:
    case StructureClass::anti_bi_invariant: {
      const Rational s = cls == StructureClass::bi_invariant ? Rational(-1) : Rational(1);
      auto p1 = (B + j_after_pull_J_first(S, B) * s) * half;
      auto sw = swap_args(p1);
      auto p2 = swap_args((sw + j_after_pull_J_first(S, sw) * s) * half);
      return antisymmetrize(p2);
    }
  }
  return B;
}

}  // namespace detail

/// 2-step brackets V x V -> Z (V = first n - c coordinates, Z = last c)
/// projected to one class for the standard J, which preserves V and Z.
/// Both n - c and c must be even.
inline LinearFamily class_family(int n, int center_dim, StructureClass cls) {
  const auto S = standard_structure<Rational>(n);
  LinearFamily fam{n, {}, {}};
  const int v = n - center_dim;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      for (int k = v; k < n; ++k) {
        VectorTwoForm<Rational> B(n);
        B.at(i, j, k) = 1;
        B.at(j, i, k) = -1;
        const auto P = detail::project_to_class(S, B, cls);
        std::vector<Rational> c(std::size_t(n) * n * n);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d) c[(std::size_t(a) * n + b) * n + d] = P.at(a, b, d);
        if (!LieAlgebra<Rational>::unchecked(n, c).constants().empty() && !is_abelian(LieAlgebra<Rational>::unchecked(n, c)))
          fam.generators.push_back(std::move(c));
      }
  return fam;
}

/// A random instance of the class: random member of class_family with the
/// standard J and a random J-compatible metric. If `cosymplectic` is set the
/// member is drawn from the cosymplectic subfamily instead.
inline Instance random_class_instance(int n, StructureClass cls, std::uint64_t seed, bool cosymplectic = false) {
  Rng rng(seed);
  const int center = (n >= 8 && rng.uniform(0, 1)) ? 4 : 2;
  const auto fam = class_family(n, center, cls);
  if (fam.generators.empty()) throw std::invalid_argument("class family is trivial in this dimension");
  const auto J0 = standard_complex_structure<Rational>(n);
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto S = AlmostHermitianStructure<Rational>::validate(random_compatible_metric(n, rng, J0), J0);
    if (cosymplectic) {
      if (auto L = random_cosymplectic_member(fam, S, rng)) return {to_string(cls) + " cosymplectic", std::move(*L), std::move(S)};
      continue;
    }
    std::vector<Rational> coeffs(fam.generators.size());
    for (auto& a : coeffs) a = rng.small(3);
    auto L = family_member(fam, coeffs);
    if (!is_abelian(L)) return {to_string(cls), LieAlgebra<Rational>::from_constants(n, L.constants()), std::move(S)};
  }
  throw std::runtime_error("could not build a " + to_string(cls) + " instance");
}

/// Curated structures, each with a short name.
inline std::vector<Instance> curated_instances() {
  using detail::complex_structure_from_pairs;
  using detail::make_instance;
  std::vector<Instance> out;
  const auto J4 = standard_complex_structure<Rational>(4);
  const auto J6 = standard_complex_structure<Rational>(6);

  // Kodaira–Thurston algebra, standard J (abelian J, not cosymplectic)
  out.push_back(make_instance("kodaira-thurston standard", "(0,0,0,12)", J4));
  // same algebra, omega = e13 + e42: almost Kähler
  out.push_back(make_instance("kodaira-thurston almost-kahler", "(0,0,0,12)", complex_structure_from_pairs(4, {{1, 3}, {4, 2}})));
  // real Heisenberg h_5 (+) R and complex Heisenberg (bi-invariant)
  out.push_back(make_instance("heisenberg h5+R", "(0,0,0,0,12+34,0)", complex_structure_from_pairs(6, {{1, 2}, {3, 4}, {5, 6}})));
  out.push_back(make_instance("complex heisenberg", "(0,0,0,0,13-24,14+23)", J6));
  // 3-step (0,0,12,13): standard J is Chern-Ricci flat, e1 <-> e3 pairing is not
  out.push_back(make_instance("three-step standard", "(0,0,12,13)", J4));
  out.push_back(make_instance("three-step twisted", "(0,0,12,13)", complex_structure_from_pairs(4, {{1, 3}, {2, 4}})));
  // complex aff(C) = C ltimes C, [x, y] = y: bi-invariant, not unimodular
  out.push_back(make_instance("complex aff", "(0,0,-13+24,-14-23)", J4));
  // aff(R) (+) aff(R), [e1, e2] = e2, [e3, e4] = e4, standard J: abelian J, not unimodular
  out.push_back(make_instance("aff(R)+aff(R)", "(0,-12,0,-34)", J4));
  // sol (+) R with J e1 = e4, J e2 = e3: almost Kähler, unimodular, solvable
  out.push_back(make_instance("sol+R almost-kahler", "(0,-12,13,0)", complex_structure_from_pairs(4, {{1, 4}, {2, 3}})));
  // unimodular non-solvable and solvable examples
  out.push_back(make_instance("sl2+R", "(-23,-212,213,0)", complex_structure_from_pairs(4, {{1, 4}, {2, 3}})));
  out.push_back(make_instance("su2+R", "(-23,13,-12,0)", complex_structure_from_pairs(4, {{1, 4}, {2, 3}})));
  out.push_back(make_instance("e(2)+R", "(0,13,-12,0)", complex_structure_from_pairs(4, {{1, 4}, {2, 3}})));
  // abelian algebra: Kähler
  out.push_back(make_instance("abelian R4", "(0,0,0,0)", J4));
  return out;
}

/// The curated instance with the given name.
inline Instance curated_instance(const std::string& name) {
  for (auto& inst : curated_instances())
    if (inst.name == name) return inst;
  throw std::invalid_argument("no curated instance named '" + name + "'");
}

}  // namespace hermlie
