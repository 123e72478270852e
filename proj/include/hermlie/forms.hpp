#pragma once

// Alternating forms on a Lie algebra. A k-form is stored by its values on
// increasing index tuples I = (i_1 < ... < i_k), encoded as bit masks and
// ranked in colexicographic order. The wedge product uses the determinant
// convention: (e^1 ^ e^2)(e_1, e_2) = 1.

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hermlie/lie_algebra.hpp"
#include "hermlie/linalg.hpp"
#include "hermlie/structure.hpp"

namespace hermlie {

namespace detail {

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * std::uint64_t(n - k + i) / std::uint64_t(i);
  return r;
}

/// All k-subsets of {0..n-1} as masks, in increasing numeric (= colex) order.
inline std::shared_ptr<const std::vector<std::uint32_t>> subset_masks(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const std::vector<std::uint32_t>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, k}];
  if (!slot) {
    auto v = std::make_shared<std::vector<std::uint32_t>>();
    v->reserve(binomial(n, k));
    if (k == 0) {
      v->push_back(0);
    } else {
      std::uint32_t m = (std::uint32_t(1) << k) - 1;
      const std::uint64_t limit = std::uint64_t(1) << n;
      while (m < limit) {
        v->push_back(m);
        const std::uint32_t c = m & (~m + 1);
        const std::uint32_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
      }
    }
    slot = std::move(v);
  }
  return slot;
}

/// Colex rank of a mask among masks of the same popcount.
inline std::size_t mask_rank(std::uint32_t mask) {
  std::size_t r = 0;
  int t = 1;
  while (mask) {
    const int p = std::countr_zero(mask);
    r += binomial(p, t);
    ++t;
    mask &= mask - 1;
  }
  return r;
}

inline std::vector<int> mask_indices(std::uint32_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

/// Number of set bits of `mask` strictly below bit `i`.
inline int bits_below(std::uint32_t mask, int i) {
  return std::popcount(mask & ((std::uint32_t(1) << i) - 1));
}

inline int ipow(int n, int k) {
  int r = 1;
  while (k-- > 0) r *= n;
  return r;
}

}  // namespace detail

template <Field F>
class KForm {
 public:
  KForm() = default;
  KForm(int n, int k) : n_(n), k_(k) {
    if (n > 30) throw DimensionError("forms are limited to dimension 30");
    if (k < 0 || k > n) throw DimensionError("form degree " + std::to_string(k) + " out of range for dimension " + std::to_string(n));
    masks_ = detail::subset_masks(n, k);
    coeff_.assign(masks_->size(), F(0));
  }

  /// sign * e^{i_1} ^ ... ^ e^{i_k} for arbitrary (0-based) indices.
  static KForm basis(int n, const std::vector<int>& idx) {
    KForm f(n, int(idx.size()));
    f.add_value(idx, F(1));
    return f;
  }

  int dim() const { return n_; }
  int degree() const { return k_; }
  std::size_t size() const { return coeff_.size(); }
  std::uint32_t mask(std::size_t r) const { return (*masks_)[r]; }
  const std::vector<std::uint32_t>& masks() const { return *masks_; }

  F& operator[](std::size_t r) { return coeff_[r]; }
  const F& operator[](std::size_t r) const { return coeff_[r]; }

  const F& coeff(std::uint32_t mask) const { return coeff_[detail::mask_rank(mask)]; }
  F& coeff(std::uint32_t mask) { return coeff_[detail::mask_rank(mask)]; }

  /// alpha(e_{i_1}, ..., e_{i_k}) for any index list (repeats give 0).
  F value(const std::vector<int>& idx) const {
    std::uint32_t m = 0;
    int sign = sort_sign(idx, m);
    if (sign == 0) return F(0);
    return sign > 0 ? coeff(m) : F(-coeff(m));
  }

  /// Adds v to alpha(e_{i_1}, ..., e_{i_k}) (and its permutations).
  void add_value(const std::vector<int>& idx, const F& v) {
    if (int(idx.size()) != k_) throw DimensionError("index list length differs from form degree");
    std::uint32_t m = 0;
    int sign = sort_sign(idx, m);
    if (sign == 0) return;
    if (sign > 0)
      coeff(m) += v;
    else
      coeff(m) -= v;
  }

  KForm& operator+=(const KForm& o) {
    check_same(o);
    for (std::size_t r = 0; r < coeff_.size(); ++r) coeff_[r] += o.coeff_[r];
    return *this;
  }
  KForm& operator-=(const KForm& o) {
    check_same(o);
    for (std::size_t r = 0; r < coeff_.size(); ++r) coeff_[r] -= o.coeff_[r];
    return *this;
  }
  KForm& operator*=(const F& s) {
    for (auto& x : coeff_) x *= s;
    return *this;
  }
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(KForm a, const F& s) { return a *= s; }
  friend KForm operator*(const F& s, KForm a) { return a *= s; }
  KForm operator-() const {
    KForm r = *this;
    for (auto& x : r.coeff_) x = -x;
    return r;
  }

  bool is_zero() const {
    for (const auto& x : coeff_)
      if (!hermlie::is_zero(x)) return false;
    return true;
  }

  F max_abs() const {
    F m(0);
    for (const auto& x : coeff_) update_max_abs(m, x);
    return m;
  }

  friend bool operator==(const KForm& a, const KForm& b) {
    if (a.n_ != b.n_ || a.k_ != b.k_) return false;
    return (a - b).is_zero();
  }

  template <Field G>
  KForm<G> convert() const {
    KForm<G> out(n_, k_);
    for (std::size_t r = 0; r < coeff_.size(); ++r) {
      if constexpr (std::is_same_v<F, G>)
        out[r] = coeff_[r];
      else
        out[r] = from_rational<G>(coeff_[r]);
    }
    return out;
  }

 private:
  void check_same(const KForm& o) const {
    if (n_ != o.n_ || k_ != o.k_) throw DimensionError("form degree or dimension mismatch");
  }

  int sort_sign(const std::vector<int>& idx, std::uint32_t& m) const {
    int inversions = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      if (idx[a] < 0 || idx[a] >= n_) throw DimensionError("form index out of range");
      const std::uint32_t bit = std::uint32_t(1) << idx[a];
      if (m & bit) return 0;
      inversions += std::popcount(m & ~((bit << 1) - 1));
      m |= bit;
    }
    return inversions % 2 ? -1 : 1;
  }

  int n_ = 0;
  int k_ = 0;
  std::shared_ptr<const std::vector<std::uint32_t>> masks_;
  std::vector<F> coeff_;
};

// ------------------------------------------------------------ dense tensors
//
// A few operations are cheaper on the full n^k array: index (i_1..i_k) maps
// to ((i_1 n + i_2) n + ...) + i_k.

template <Field F>
std::vector<F> to_dense(const KForm<F>& a) {
  const int n = a.dim(), k = a.degree();
  std::vector<F> t(detail::ipow(n, k), F(0));
  std::vector<int> idx(k), perm(k);
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (is_zero(a[r])) continue;
    idx = detail::mask_indices(a.mask(r));
    for (int p = 0; p < k; ++p) perm[p] = p;
    do {
      int inv = 0;
      for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y)
          if (perm[x] > perm[y]) ++inv;
      std::size_t off = 0;
      for (int p = 0; p < k; ++p) off = off * n + idx[perm[p]];
      t[off] = inv % 2 ? F(-a[r]) : a[r];
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return t;
}

/// Reads the increasing-index entries of an (assumed alternating) array.
template <Field F>
KForm<F> from_dense(int n, int k, const std::vector<F>& t) {
  KForm<F> a(n, k);
  for (std::size_t r = 0; r < a.size(); ++r) {
    std::size_t off = 0;
    for (int i : detail::mask_indices(a.mask(r))) off = off * n + i;
    a[r] = t[off];
  }
  return a;
}

/// out[.., a, ..] = sum_x t[.., x, ..] M(x, a) in the given slot.
template <Field F>
std::vector<F> contract_slot(const std::vector<F>& t, int n, int k, int slot, const Matrix<F>& M) {
  std::vector<F> out(t.size(), F(0));
  const std::size_t inner = detail::ipow(n, k - 1 - slot);
  const std::size_t outer = detail::ipow(n, slot);
  for (std::size_t o = 0; o < outer; ++o)
    for (int x = 0; x < n; ++x) {
      const std::size_t src = (o * n + x) * inner;
      for (int a = 0; a < n; ++a) {
        const F& m = M(x, a);
        if (is_zero(m)) continue;
        const std::size_t dst = (o * n + a) * inner;
        for (std::size_t q = 0; q < inner; ++q)
          if (!is_zero(t[src + q])) out[dst + q] += t[src + q] * m;
      }
    }
  return out;
}

/// (A^* alpha)(X_1..X_k) = alpha(A X_1, ..., A X_k).
template <Field F>
KForm<F> pullback(const KForm<F>& a, const Matrix<F>& A) {
  const int n = a.dim(), k = a.degree();
  auto t = to_dense(a);
  for (int s = 0; s < k; ++s) t = contract_slot(t, n, k, s, A);
  return from_dense(n, k, t);
}

/// alpha(v_1, ..., v_k) for arbitrary vectors.
template <Field F>
F evaluate(const KForm<F>& a, const std::vector<Vector<F>>& vs) {
  const int n = a.dim(), k = a.degree();
  if (int(vs.size()) != k) throw DimensionError("evaluate: wrong number of arguments");
  Matrix<F> A(n, n);
  for (int s = 0; s < k; ++s)
    for (int i = 0; i < n; ++i) A(i, s) = vs[s][i];
  if (k == 0) return a[0];
  return pullback(a, A).value([&] {
    std::vector<int> idx(k);
    for (int s = 0; s < k; ++s) idx[s] = s;
    return idx;
  }());
}

// ------------------------------------------------------------- operations

template <Field F>
KForm<F> wedge(const KForm<F>& a, const KForm<F>& b) {
  if (a.dim() != b.dim()) throw DimensionError("wedge: dimension mismatch");
  const int n = a.dim();
  if (a.degree() + b.degree() > n) throw DimensionError("wedge: degree exceeds dimension");
  KForm<F> out(n, a.degree() + b.degree());
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (is_zero(a[r])) continue;
    const std::uint32_t A = a.mask(r);
    for (std::size_t s = 0; s < b.size(); ++s) {
      if (is_zero(b[s])) continue;
      const std::uint32_t B = b.mask(s);
      if (A & B) continue;
      // sign of the shuffle: pairs (i in A, j in B) with i > j
      int inv = 0;
      for (std::uint32_t m = A; m; m &= m - 1) inv += detail::bits_below(B, std::countr_zero(m));
      const F v = a[r] * b[s];
      if (inv % 2)
        out.coeff(A | B) -= v;
      else
        out.coeff(A | B) += v;
    }
  }
  return out;
}

/// Chevalley–Eilenberg differential:
/// d alpha(X_0..X_k) = sum_{i<j} (-1)^{i+j} alpha([X_i,X_j], X_0..^i..^j..X_k).
template <Field F>
KForm<F> ce_differential(const LieAlgebra<F>& L, const KForm<F>& a) {
  const int n = L.dim(), k = a.degree();
  if (a.dim() != n) throw DimensionError("differential: form dimension differs from algebra");
  if (k >= n) throw DimensionError("differential: degree overflow");
  KForm<F> out(n, k + 1);
  for (std::size_t r = 0; r < out.size(); ++r) {
    const std::uint32_t I = out.mask(r);
    const auto idx = detail::mask_indices(I);
    F acc(0);
    for (int p = 0; p <= k; ++p)
      for (int q = p + 1; q <= k; ++q) {
        const std::uint32_t rest = I & ~(std::uint32_t(1) << idx[p]) & ~(std::uint32_t(1) << idx[q]);
        F inner(0);
        for (int m = 0; m < n; ++m) {
          const F& c = L.c(idx[p], idx[q], m);
          if (is_zero(c)) continue;
          const std::uint32_t bit = std::uint32_t(1) << m;
          if (rest & bit) continue;
          const F& v = a.coeff(rest | bit);
          if (is_zero(v)) continue;
          if (detail::bits_below(rest, m) % 2)
            inner -= c * v;
          else
            inner += c * v;
        }
        if ((p + q) % 2)
          acc -= inner;
        else
          acc += inner;
      }
    out[r] = acc;
  }
  return out;
}

/// (iota_X alpha)(Y_1..) = alpha(X, Y_1, ..).
template <Field F>
KForm<F> interior(const Vector<F>& x, const KForm<F>& a) {
  const int n = a.dim(), k = a.degree();
  if (k == 0) throw DimensionError("interior product of a 0-form");
  KForm<F> out(n, k - 1);
  for (std::size_t r = 0; r < out.size(); ++r) {
    const std::uint32_t I = out.mask(r);
    F acc(0);
    for (int m = 0; m < n; ++m) {
      const std::uint32_t bit = std::uint32_t(1) << m;
      if ((I & bit) || is_zero(x[m])) continue;
      const F v = x[m] * a.coeff(I | bit);
      if (detail::bits_below(I, m) % 2)
        acc -= v;
      else
        acc += v;
    }
    out[r] = acc;
  }
  return out;
}

/// omega(e_i, e_j) as a 2-form.
template <Field F>
KForm<F> two_form(const Matrix<F>& m) {
  const int n = m.rows();
  KForm<F> a(n, 2);
  for (std::size_t r = 0; r < a.size(); ++r) {
    const auto idx = detail::mask_indices(a.mask(r));
    a[r] = m(idx[0], idx[1]);
  }
  return a;
}

template <Field F>
Matrix<F> to_matrix(const KForm<F>& a) {
  if (a.degree() != 2) throw DimensionError("to_matrix needs a 2-form");
  const int n = a.dim();
  Matrix<F> m(n, n);
  for (std::size_t r = 0; r < a.size(); ++r) {
    const auto idx = detail::mask_indices(a.mask(r));
    m(idx[0], idx[1]) = a[r];
    m(idx[1], idx[0]) = -a[r];
  }
  return m;
}

template <Field F>
KForm<F> fundamental_form(const AlmostHermitianStructure<F>& S) {
  return two_form(S.omega());
}

/// omega^k (k-fold wedge; omega^0 = 1).
template <Field F>
KForm<F> omega_power(const AlmostHermitianStructure<F>& S, int k) {
  KForm<F> out(S.dim(), 0);
  out[0] = F(1);
  const auto w = fundamental_form(S);
  for (int i = 0; i < k; ++i) out = wedge(out, w);
  return out;
}

template <Field F>
KForm<F> one_form(const Vector<F>& v) {
  KForm<F> a(int(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) a[i] = v[i];
  return a;
}

template <Field F>
Vector<F> components(const KForm<F>& a) {
  if (a.degree() != 1) throw DimensionError("components needs a 1-form");
  Vector<F> v(a.dim());
  for (int i = 0; i < a.dim(); ++i) v[i] = a[i];
  return v;
}

/// X^flat = g(X, .).
template <Field F>
KForm<F> flat(const AlmostHermitianStructure<F>& S, const Vector<F>& x) {
  return one_form(Vector<F>(S.g() * x));
}

template <Field F>
Vector<F> sharp(const AlmostHermitianStructure<F>& S, const KForm<F>& a) {
  return S.g_inv() * components(a);
}

/// (J alpha)(X_1..X_r) = (-1)^r alpha(JX_1, ..., JX_r).
template <Field F>
KForm<F> j_on_forms(const AlmostHermitianStructure<F>& S, const KForm<F>& a) {
  auto out = pullback(a, S.J());
  if (a.degree() % 2) out *= F(-1);
  return out;
}

/// d^c = (-1)^r J d J on r-forms.
template <Field F>
KForm<F> dc_operator(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const KForm<F>& a) {
  auto out = j_on_forms(S, ce_differential(L, j_on_forms(S, a)));
  if (a.degree() % 2) out *= F(-1);
  return out;
}

/// Metric inner product on k-forms: the basis e^I (I increasing) has Gram
/// matrix det(g^{-1}[I, J]), so g-orthonormal coframes give orthonormal
/// wedge monomials.
template <Field F>
F inner_product(const AlmostHermitianStructure<F>& S, const KForm<F>& a, const KForm<F>& b) {
  if (a.degree() != b.degree() || a.dim() != b.dim()) throw DimensionError("inner product of forms of different degree");
  const int n = a.dim(), k = a.degree();
  auto t = to_dense(b);
  for (int s = 0; s < k; ++s) t = contract_slot(t, n, k, s, S.g_inv());
  const auto raised = from_dense(n, k, t);
  F acc(0);
  for (std::size_t r = 0; r < a.size(); ++r)
    if (!is_zero(a[r])) acc += a[r] * raised[r];
  return acc;
}

/// Formal adjoint of the differential: <d* alpha, beta> = <alpha, d beta>.
template <Field F>
KForm<F> adjoint_differential(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const KForm<F>& a) {
  const int n = a.dim(), k = a.degree();
  if (k == 0) throw DimensionError("adjoint differential of a 0-form");
  // raise alpha once, then pair against d e^J for every (k-1)-monomial
  auto t = to_dense(a);
  for (int s = 0; s < k; ++s) t = contract_slot(t, n, k, s, S.g_inv());
  const auto raised = from_dense(n, k, t);
  KForm<F> v(n, k - 1);
  for (std::size_t r = 0; r < v.size(); ++r) {
    KForm<F> e(n, k - 1);
    e[r] = F(1);
    const auto de = ce_differential(L, e);
    F acc(0);
    for (std::size_t q = 0; q < de.size(); ++q)
      if (!is_zero(de[q])) acc += de[q] * raised[q];
    v[r] = acc;
  }
  // v holds <d* alpha, e^J>; lower with g to get the coefficients
  auto vt = to_dense(v);
  for (int s = 0; s < k - 1; ++s) vt = contract_slot(vt, n, k - 1, s, S.g());
  return from_dense(n, k - 1, vt);
}

/// Mean-curvature vector: g(H, X) = tr ad_X.
template <Field F>
Vector<F> mean_curvature_vector(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S) {
  return S.g_inv() * ad_traces(L);
}

/// Riemannian codifferential of a left-invariant form,
/// delta = d*_alg + iota_H, which reduces to d*_alg on unimodular algebras.
template <Field F>
KForm<F> codifferential(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const KForm<F>& a) {
  auto out = adjoint_differential(L, S, a);
  const auto H = mean_curvature_vector(L, S);
  if (!is_zero_vector(H)) out += interior(H, a);
  return out;
}

/// Real type components. Entry p (0 <= p <= k/2) of the result is the real
/// form alpha^{p,k-p} + alpha^{k-p,p}; the entries sum to alpha.
///
/// Each slot is contracted with the projectors 1/2(1 - iJ) onto T^{1,0} and
/// 1/2(1 + iJ) onto T^{0,1}; complex tensors are carried as (re, im) pairs.
template <Field F>
std::vector<KForm<F>> type_decomposition(const AlmostHermitianStructure<F>& S, const KForm<F>& a) {
  const int n = a.dim(), k = a.degree();
  std::vector<KForm<F>> parts(k / 2 + 1, KForm<F>(n, k));
  if (k == 0) {
    parts[0] = a;
    return parts;
  }
  std::vector<std::vector<F>> acc(k / 2 + 1, std::vector<F>(detail::ipow(n, k), F(0)));
  const Matrix<F>& J = S.J();

  // Projectors are applied unscaled (1 -/+ iJ); the 2^-k is restored at the end.
  auto recurse = [&](auto&& self, const std::vector<F>& re, const std::vector<F>& im, int slot, int plus) -> void {
    if (slot == k) {
      auto& dst = acc[std::min(plus, k - plus)];
      for (std::size_t q = 0; q < re.size(); ++q) dst[q] += re[q];
      return;
    }
    const auto ure = contract_slot(re, n, k, slot, J);
    const auto uim = contract_slot(im, n, k, slot, J);
    std::vector<F> r2(re.size()), i2(re.size());
    // (1 - iJ): re + U_im, im - U_re
    for (std::size_t q = 0; q < re.size(); ++q) {
      r2[q] = re[q] + uim[q];
      i2[q] = im[q] - ure[q];
    }
    self(self, r2, i2, slot + 1, plus + 1);
    // (1 + iJ): re - U_im, im + U_re
    for (std::size_t q = 0; q < re.size(); ++q) {
      r2[q] = re[q] - uim[q];
      i2[q] = im[q] + ure[q];
    }
    self(self, r2, i2, slot + 1, plus);
  };
  const auto t = to_dense(a);
  recurse(recurse, t, std::vector<F>(t.size(), F(0)), 0, 0);

  F scale(1);
  for (int s = 0; s < k; ++s) scale /= F(2);
  for (int p = 0; p <= k / 2; ++p) {
    parts[p] = from_dense(n, k, acc[p]);
    parts[p] *= scale;
  }
  return parts;
}

/// alpha^{p,k-p} + alpha^{k-p,p} as a real form.
template <Field F>
KForm<F> type_component(const AlmostHermitianStructure<F>& S, const KForm<F>& a, int p) {
  const int k = a.degree();
  if (p < 0 || p > k) throw DimensionError("type index out of range");
  return type_decomposition(S, a)[std::min(p, k - p)];
}

/// gamma = gamma^+ + gamma^-, with gamma^- the (3,0)+(0,3) part and gamma^+
/// the (2,1)+(1,2) part.
template <Field F>
std::pair<KForm<F>, KForm<F>> plus_minus_split(const AlmostHermitianStructure<F>& S, const KForm<F>& g3) {
  if (g3.degree() != 3) throw DimensionError("plus_minus_split needs a 3-form");
  auto parts = type_decomposition(S, g3);
  return {std::move(parts[1]), std::move(parts[0])};
}

}  // namespace hermlie
