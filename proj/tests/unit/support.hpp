#pragma once

// Independent brute-force oracles shared by the unit tests. Nothing here
// reuses the library's combinatorics: forms are evaluated as alternating
// multilinear functions by summing over permutations.

#include <algorithm>
#include <numeric>
#include <vector>

#include "hermlie/forms.hpp"
#include "hermlie/random.hpp"

namespace oracle {

using hermlie::Matrix;
using hermlie::Rational;
using hermlie::Vector;

inline int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

inline Rational leibniz_det(const Matrix<Rational>& m) {
  const int n = m.rows();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational out(0);
  do {
    Rational term(perm_sign(p));
    for (int i = 0; i < n; ++i) term *= m(i, p[i]);
    out += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// alpha(v_1, ..., v_k) for a form stored on increasing index sets:
/// sum over increasing I of alpha_I * det[v_a(I_b)].
inline Rational evaluate(const hermlie::KForm<Rational>& a, const std::vector<Vector<Rational>>& vs) {
  const int k = a.degree();
  Rational out(0);
  for (std::size_t q = 0; q < a.size(); ++q) {
    if (a[q] == 0) continue;
    std::vector<int> idx;
    for (int i = 0; i < a.dim(); ++i)
      if (a.mask(q) >> i & 1u) idx.push_back(i);
    Matrix<Rational> m(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) m(r, c) = vs[r][idx[c]];
    out += a[q] * leibniz_det(m);
  }
  return out;
}

/// Chevalley-Eilenberg differential straight from its defining formula:
/// d alpha(X_0..X_k) = sum_{i<j} (-1)^{i+j} alpha([X_i,X_j], X_0..^i..^j..X_k).
inline Rational d_evaluate(const hermlie::LieAlgebra<Rational>& L, const hermlie::KForm<Rational>& a,
                           const std::vector<Vector<Rational>>& xs) {
  Rational out(0);
  const int m = int(xs.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<Vector<Rational>> args{hermlie::bracket(L, xs[i], xs[j])};
      for (int l = 0; l < m; ++l)
        if (l != i && l != j) args.push_back(xs[l]);
      out += ((i + j) % 2 ? Rational(-1) : Rational(1)) * evaluate(a, args);
    }
  return out;
}

inline Vector<Rational> random_vector(int n, hermlie::Rng& rng, long bound = 3) {
  Vector<Rational> v(n);
  for (auto& x : v) x = rng.small(bound);
  return v;
}

inline hermlie::KForm<Rational> random_form(int n, int k, hermlie::Rng& rng, long bound = 3) {
  hermlie::KForm<Rational> a(n, k);
  for (std::size_t q = 0; q < a.size(); ++q) a[q] = rng.small(bound);
  return a;
}

}  // namespace oracle
