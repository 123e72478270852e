#pragma once

// Deterministic instance generators. All randomness comes from
// std::mt19937_64 with a fixed integer mapping (no std distributions, whose
// output is implementation-defined), so a seed reproduces the same instance
// on every platform. Everything is generated over the rationals.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermlie/forms.hpp"
#include "hermlie/lie_algebra.hpp"
#include "hermlie/linalg.hpp"
#include "hermlie/structure.hpp"

namespace hermlie {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of the index-th sample of a run.
inline std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 1));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) { return lo + long(gen_() % std::uint64_t(hi - lo + 1)); }
  Rational small(long bound) { return Rational(uniform(-bound, bound)); }

 private:
  std::mt19937_64 gen_;
};

struct Instance {
  std::string name;
  LieAlgebra<Rational> algebra;
  AlmostHermitianStructure<Rational> structure;
};

// --------------------------------------------------------------- algebras

/// Brackets of the first n-c basis vectors land in the span of the last c
/// (central) ones with integer coefficients in [-3, 3]. Every double bracket
/// vanishes, so Jacobi holds and the algebra is 2-step nilpotent.
/// `center_dim` 0 picks c in [1, n/2] at random.
inline LieAlgebra<Rational> random_two_step(int n, std::uint64_t seed, int center_dim = 0) {
  if (n < 4) throw std::invalid_argument("random_two_step needs dimension >= 4");
  Rng rng(seed);
  const int c = center_dim > 0 ? center_dim : int(rng.uniform(1, n / 2));
  const int v = n - c;
  auto L = LieAlgebra<Rational>::abelian(n);
  bool any = false;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      for (int k = v; k < n; ++k) {
        const Rational a = rng.small(3);
        if (a != 0) any = true;
        L.set_bracket_coefficient(i, j, k, a);
      }
  if (!any) L.set_bracket_coefficient(0, 1, v, Rational(1));
  return L;
}

/// R ltimes_A R^{n-1}: [e_0, e_j] = A e_j on the abelian ideal spanned by
/// e_1..e_{n-1}; Jacobi holds for every A.
inline LieAlgebra<Rational> semidirect_algebra(const Matrix<Rational>& A) {
  const int n = A.rows() + 1;
  auto L = LieAlgebra<Rational>::abelian(n);
  for (int j = 0; j < n - 1; ++j)
    for (int k = 0; k < n - 1; ++k)
      if (A(k, j) != 0) L.set_bracket_coefficient(0, j + 1, k + 1, A(k, j));
  return L;
}

// ------------------------------------------------------------- structures

/// A random J0-compatible positive definite integer matrix,
/// G0 = (M + J0^T M J0) / 2 with M = A^T A + Id.
inline Matrix<Rational> random_compatible_metric(int n, Rng& rng, const Matrix<Rational>& J0) {
  Matrix<Rational> A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = rng.small(1);
  const auto M = A.transpose() * A + Matrix<Rational>::identity(n);
  return (M + J0.transpose() * M * J0) * Rational(1, 2);
}

/// Random (g, J): J = P J0 P^{-1} and g = P^{-T} G0 P^{-1} with J0 standard,
/// G0 a random J0-compatible metric and P a random unimodular integer matrix
/// (product of elementary row operations), so everything stays rational.
inline AlmostHermitianStructure<Rational> random_compatible_structure(int n, std::uint64_t seed) {
  if (n % 2 != 0) throw StructureError("odd dimension");
  Rng rng(seed);
  const auto J0 = standard_complex_structure<Rational>(n);
  const auto G0 = random_compatible_metric(n, rng, J0);
  auto P = Matrix<Rational>::identity(n);
  for (int step = 0; step < n; ++step) {
    const int a = int(rng.uniform(0, n - 1));
    int b = int(rng.uniform(0, n - 2));
    if (b >= a) ++b;
    const Rational f = rng.uniform(0, 1) ? Rational(1) : Rational(-1);
    for (int j = 0; j < n; ++j) P(b, j) += f * P(a, j);
  }
  const auto Pinv = inverse(P);
  return AlmostHermitianStructure<Rational>::validate(Pinv.transpose() * G0 * Pinv, P * J0 * Pinv);
}

template <Field F>
AlmostHermitianStructure<F> random_compatible_structure(const LieAlgebra<F>& L, std::uint64_t seed) {
  return random_compatible_structure(L.dim(), seed).template convert<F>();
}

// --------------------------------------------------- linear families

/// A linear family of structure tensors closed under the Jacobi identity
/// (sums of members are Lie algebras), e.g. 2-step tensors with a fixed
/// center, or semidirect products with a varying matrix.
struct LinearFamily {
  int dim = 0;
  std::vector<std::vector<Rational>> generators;
  /// Extra linear conditions on the coefficient vector (one row each).
  std::vector<std::vector<Rational>> constraints;
};

inline LinearFamily two_step_family(int n, int center_dim) {
  LinearFamily fam{n, {}, {}};
  const int v = n - center_dim;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      for (int k = v; k < n; ++k) {
        auto L = LieAlgebra<Rational>::abelian(n);
        L.set_bracket_coefficient(i, j, k, Rational(1));
        fam.generators.push_back(L.constants());
      }
  return fam;
}

/// Semidirect products R ltimes_A R^{n-1}; `unimodular` adds tr A = 0.
inline LinearFamily semidirect_family(int n, bool unimodular) {
  LinearFamily fam{n, {}, {}};
  std::vector<Rational> trace_row;
  for (int j = 0; j < n - 1; ++j)
    for (int k = 0; k < n - 1; ++k) {
      Matrix<Rational> A(n - 1, n - 1);
      A(k, j) = 1;
      fam.generators.push_back(semidirect_algebra(A).constants());
      trace_row.push_back(Rational(j == k ? 1 : 0));
    }
  if (unimodular) fam.constraints.push_back(trace_row);
  return fam;
}

inline LieAlgebra<Rational> family_member(const LinearFamily& fam, const std::vector<Rational>& coeffs) {
  std::vector<Rational> c(std::size_t(fam.dim) * fam.dim * fam.dim, Rational(0));
  for (std::size_t p = 0; p < fam.generators.size(); ++p) {
    if (coeffs[p] == 0) continue;
    for (std::size_t q = 0; q < c.size(); ++q) c[q] += coeffs[p] * fam.generators[p][q];
  }
  return LieAlgebra<Rational>::unchecked(fam.dim, std::move(c));
}

/// A random member of the family with codifferential(omega) = 0 for the
/// given structure. delta(omega) is linear in the structure constants, so
/// the cosymplectic members form the nullspace of a matrix; a random integer
/// combination of its basis is returned. nullopt if only 0 qualifies.
inline std::optional<LieAlgebra<Rational>> random_cosymplectic_member(const LinearFamily& fam,
                                                                      const AlmostHermitianStructure<Rational>& S,
                                                                      Rng& rng) {
  const int n = fam.dim;
  const int P = int(fam.generators.size());
  const auto w = fundamental_form(S);
  Matrix<Rational> M(n + int(fam.constraints.size()), P);
  for (int p = 0; p < P; ++p) {
    const auto L = LieAlgebra<Rational>::unchecked(n, fam.generators[p]);
    const auto d = codifferential(L, S, w);
    for (int k = 0; k < n; ++k) M(k, p) = d[k];
  }
  for (std::size_t r = 0; r < fam.constraints.size(); ++r)
    for (int p = 0; p < P; ++p) M(n + int(r), p) = fam.constraints[r][p];
  const auto ker = nullspace(M);
  if (ker.empty()) return std::nullopt;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Rational> coeffs(P, Rational(0));
    for (const auto& v : ker) {
      const Rational a = rng.small(3);
      for (int p = 0; p < P; ++p) coeffs[p] += a * v[p];
    }
    auto L = family_member(fam, coeffs);
    if (!is_abelian(L)) return LieAlgebra<Rational>::from_constants(n, L.constants());
  }
  return std::nullopt;
}

/// Random 2-step instance with a random structure (the theorem-level sample).
inline Instance random_two_step_instance(int n, std::uint64_t seed) {
  auto L = random_two_step(n, splitmix64(seed));
  auto S = random_compatible_structure(n, splitmix64(seed + 1));
  return {"two-step", std::move(L), std::move(S)};
}

/// Random cosymplectic 2-step instance: structure first, then brackets from
/// the nullspace of omega -> delta(omega). Needs at least three non-central
/// directions, so the center dimension is drawn from [1, n-3].
inline Instance random_cosymplectic_two_step(int n, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0;; ++attempt) {
    const int hi = std::min(n / 2, n - 3);
    const int c = int(rng.uniform(1, std::max(1, hi)));
    auto S = random_compatible_structure(n, rng.next());
    if (auto L = random_cosymplectic_member(two_step_family(n, c), S, rng))
      return {"cosymplectic two-step", std::move(*L), std::move(S)};
    if (attempt > 64) throw std::runtime_error("could not build a cosymplectic 2-step instance");
  }
}

/// Random unimodular, non-nilpotent (generically) cosymplectic instance in
/// the semidirect family.
inline Instance random_cosymplectic_semidirect(int n, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0;; ++attempt) {
    auto S = random_compatible_structure(n, rng.next());
    if (auto L = random_cosymplectic_member(semidirect_family(n, true), S, rng))
      return {"cosymplectic semidirect", std::move(*L), std::move(S)};
    if (attempt > 64) throw std::runtime_error("could not build a cosymplectic semidirect instance");
  }
}

/// Random 3-step nilpotent algebra R ltimes_A R^{n-1}, where A maps a first
/// block of coordinates to a second and the second to a third, so A^3 = 0;
/// retried until A^2 != 0.
inline LieAlgebra<Rational> random_three_step(int n, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("random_three_step: dim must be at least 4");
  Rng rng(seed);
  const int m = n - 1;
  for (;;) {
    const int b1 = int(rng.uniform(1, m - 2));
    const int b2 = int(rng.uniform(b1 + 1, m - 1));
    Matrix<Rational> A(m, m);
    for (int i = b1; i < b2; ++i)
      for (int j = 0; j < b1; ++j) A(i, j) = rng.small(3);
    for (int i = b2; i < m; ++i)
      for (int j = b1; j < b2; ++j) A(i, j) = rng.small(3);
    if (!(A * A).is_zero()) return semidirect_algebra(A);
  }
}

/// Random instance of the requested nilpotency step (1 = abelian algebra).
inline Instance random_instance(int n, int step, std::uint64_t seed) {
  if (n % 2 != 0) throw StructureError("odd dimension");
  auto S = random_compatible_structure(n, splitmix64(seed + 1));
  switch (step) {
    case 1: return {"abelian", LieAlgebra<Rational>::abelian(n), std::move(S)};
    case 2: return random_two_step_instance(n, seed);
    case 3: return {"three-step", random_three_step(n, splitmix64(seed)), std::move(S)};
  }
  throw std::invalid_argument("step must be 1, 2 or 3");
}

}  // namespace hermlie
