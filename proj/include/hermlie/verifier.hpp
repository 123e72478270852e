#pragma once

// Batch verification suites. Each suite draws instances deterministically
// from (seed, index), runs a battery of checks on each one, and collects a
// SuiteReport; the first failing sample is kept as a reproducible witness.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hermlie/classes.hpp"
#include "hermlie/connection.hpp"
#include "hermlie/instances.hpp"
#include "hermlie/notation.hpp"
#include "hermlie/random.hpp"
#include "hermlie/ricci.hpp"

namespace hermlie {

enum class Mode { exact, floating };

inline std::string to_string(Mode m) { return m == Mode::exact ? "exact" : "float"; }

struct SampleSpec {
  int dim = 6;
  int step = 2;
  std::uint64_t seed = 1;
  int count = 100;
  Mode mode = Mode::exact;
};

struct SampleVerdict {
  int index = 0;
  std::uint64_t seed = 0;
  std::string kind;
  bool pass = true;
  double residual = 0;
  std::string detail;
};

struct Witness {
  int index = 0;
  std::uint64_t seed = 0;
  std::string kind;
  std::string reason;
  LieAlgebra<Rational> algebra;
  AlmostHermitianStructure<Rational> structure;
};

struct SuiteReport {
  std::string suite;
  Mode mode = Mode::exact;
  SampleSpec spec;
  int samples = 0;
  int passed = 0;
  double max_residual = 0;
  std::vector<SampleVerdict> verdicts;
  std::optional<Witness> witness;
  std::vector<std::string> observations;
  double seconds = 0;

  bool ok() const { return samples == passed; }
};

/// Collects named checks for one sample. A check passes when its quantity is
/// zero in the backend's sense (exact zero, or below epsilon()).
template <Field F>
class Checklist {
 public:
  void zero(const std::string& what, const F& quantity) {
    const double r = std::abs(to_double(quantity));
    if (r > residual_) residual_ = r;
    if (!is_zero(quantity)) fail(what + " = " + to_string(quantity));
  }
  void require(const std::string& what, bool ok) {
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    if (!failures_.empty()) failures_ += "; ";
    failures_ += what;
  }
  bool ok() const { return failures_.empty(); }
  double residual() const { return residual_; }
  const std::string& failures() const { return failures_; }

 private:
  double residual_ = 0;
  std::string failures_;
};

namespace detail {

template <Field F>
F form_difference(const KForm<F>& a, const KForm<F>& b) {
  return (a - b).max_abs();
}

/// 1/2 (1-t) g(d*omega, [X,Y]^flat) with no precondition on the algebra.
template <Field F>
KForm<F> pairing_ricci(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, const F& t) {
  const int n = L.dim();
  const auto pairing = codiff_pairing(L, S);
  KForm<F> out(n, 2);
  for (std::size_t q = 0; q < out.size(); ++q) {
    const auto idx = mask_indices(out.mask(q));
    F p(0);
    for (int k = 0; k < n; ++k) p += L.c(idx[0], idx[1], k) * pairing[k];
    out[q] = (F(1) - t) * p / F(2);
  }
  return out;
}

}  // namespace detail

// ----------------------------------------------------------------- 2-step

/// Checks on one 2-step instance: the Chern Ricci form vanishes by both
/// routes; for t in {-1, 0, 2}, rho^t = 0 iff delta(omega) = 0; and rho^t
/// equals the 2-step closed form for all sampled t.
template <Field F>
void theorem1_checks(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, Checklist<F>& ck) {
  // On a non-2-step input (e.g. a tampered witness) the checks still run, so
  // the report shows which identities break, not only the precondition.
  const bool two_step = is_two_step(L);
  if (!two_step) ck.fail(is_abelian(L) ? "algebra is abelian, not 2-step" : "algebra is not 2-step nilpotent");
  const CanonicalFamily<F> fam(L, S);
  const auto chern = fam.connection(F(1));
  ck.zero("|rho^1| (curvature)", ricci_via_curvature(L, S, chern, F(1)).rho_hat.max_abs());
  ck.zero("|rho^1| (d theta)", ricci_via_theta(L, S, F(1)).rho_hat.max_abs());
  const bool cosymplectic = is_cosymplectic(L, S);
  for (int ti : {-1, 0, 2}) {
    const F t(ti);
    const auto rho = ricci_via_theta(L, S, t);
    const bool flat = rho.is_zero();
    if (flat != cosymplectic)
      ck.fail("t=" + std::to_string(ti) + ": rho^t " + (flat ? "= 0" : "!= 0") + " but delta(omega) " +
              (cosymplectic ? "= 0" : "!= 0"));
  }
  for (int ti : {-1, 0, 1, 2}) {
    const F t(ti);
    ck.zero("|rho^t - closed form| t=" + std::to_string(ti),
            detail::form_difference(ricci_via_theta(L, S, t).rho_hat,
                                    two_step ? two_step_ricci(L, S, t).rho_hat : detail::pairing_ricci(L, S, t)));
  }
}

// ------------------------------------------------------- t-independence

/// rho^t identical for t in {-1, 0, 1, 2}, by d(theta) and by curvature.
template <Field F>
void t_independence_checks(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, Checklist<F>& ck) {
  const CanonicalFamily<F> fam(L, S);
  const auto ref = ricci_via_theta(L, S, F(1)).rho_hat;
  for (int ti : {-1, 0, 1, 2}) {
    const F t(ti);
    ck.zero("|rho^t - rho^1| t=" + std::to_string(ti), detail::form_difference(ricci_via_theta(L, S, t).rho_hat, ref));
    ck.zero("|rho^t(curv) - rho^1| t=" + std::to_string(ti),
            detail::form_difference(ricci_via_curvature(L, S, fam.connection(t), t).rho_hat, ref));
  }
}

template <Field F>
bool ricci_depends_on_t(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S) {
  const auto ref = ricci_via_theta(L, S, F(1)).rho_hat;
  for (int ti : {-1, 0, 2})
    if (!(ricci_via_theta(L, S, F(ti)).rho_hat == ref)) return true;
  return false;
}

// ----------------------------------------------------------------- classes

template <Field F>
void class_checks(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, StructureClass cls, Checklist<F>& ck) {
  if (!has_class(L, S, cls)) {
    ck.fail("instance is not " + to_string(cls));
    return;
  }
  const bool unimodular = is_unimodular(L);
  const bool cosymplectic = is_cosymplectic(L, S);
  for (int ti : {-1, 0, 1, 2}) {
    const F t(ti);
    RicciForm<F> rho;
    try {
      rho = class_formula_ricci(L, S, t, cls);
    } catch (const ConsistencyError& e) {
      ck.fail(std::string(e.what()) + " at t=" + std::to_string(ti));
      continue;
    }
    const std::string at = " t=" + std::to_string(ti);
    if (unimodular && cls != StructureClass::abelian) ck.zero("|rho^t|" + at, rho.rho_hat.max_abs());
    if (unimodular && cls == StructureClass::abelian) {
      // rho^t = 1/2 (1-t) g(d*omega, [X,Y]^flat); zero at t != 1 iff cosymplectic
      ck.zero("|rho^t - (1-t)/2 pairing|" + at,
              detail::form_difference(rho.rho_hat, detail::pairing_ricci(L, S, t)));
      if (ti != 1 && rho.is_zero() != cosymplectic)
        ck.fail("abelian J:" + at + " rho^t " + (rho.is_zero() ? "= 0" : "!= 0") + " but cosymplectic = " +
                (cosymplectic ? "true" : "false"));
    }
  }
}

// ------------------------------------------------------------- consistency

/// The cross-validation battery used on arbitrary (not necessarily
/// nilpotent or unimodular) algebras.
template <Field F>
void consistency_checks(const LieAlgebra<F>& L, const AlmostHermitianStructure<F>& S, Checklist<F>& ck,
                        std::uint64_t seed) {
  const int n = L.dim();
  const CanonicalFamily<F> fam(L, S);
  const auto flags = class_predicates(L, S);
  const auto w = fundamental_form(S);

  // d^2 = 0 on omega and on a random 1-form and 2-form
  Rng rng(seed);
  KForm<F> a1(n, 1), a2(n, 2);
  for (std::size_t q = 0; q < a1.size(); ++q) a1[q] = F(rng.uniform(-3, 3));
  for (std::size_t q = 0; q < a2.size(); ++q) a2[q] = F(rng.uniform(-3, 3));
  ck.zero("|d d omega|", ce_differential(L, ce_differential(L, w)).max_abs());
  ck.zero("|d d a1|", ce_differential(L, ce_differential(L, a1)).max_abs());
  if (n >= 4) ck.zero("|d d a2|", ce_differential(L, ce_differential(L, a2)).max_abs());

  // adjointness <d* alpha, beta> = <alpha, d beta> over basis 1-forms
  for (const KForm<F>* alpha : {&w, static_cast<const KForm<F>*>(&a2)}) {
    const auto ds = adjoint_differential(L, S, *alpha);
    for (int i = 0; i < n; ++i) {
      KForm<F> e(n, 1);
      e[i] = F(1);
      ck.zero("adjointness e" + std::to_string(i + 1), F(inner_product(S, ds, e) - inner_product(S, *alpha, ce_differential(L, e))));
    }
  }

  // two characterisations of cosymplectic
  ck.require("delta omega = 0 <=> d omega^{m-1} = 0", flags.cosymplectic == is_cosymplectic_by_power(L, S));

  // affinity of the family in t
  const auto lm = fam.lowered(F(-1)), l0 = fam.lowered(F(0)), l1 = fam.lowered(F(1)), l2 = fam.lowered(F(2));
  F aff(0);
  for (std::size_t q = 0; q < l0.size(); ++q) {
    update_max_abs(aff, F(l2[q] - F(2) * l1[q] + l0[q]));
    update_max_abs(aff, F(lm[q] - F(2) * l0[q] + l1[q]));
  }
  ck.zero("affinity defect", aff);

  const auto chern = fam.connection(F(1));
  for (int ti : {-1, 0, 1, 2}) {
    const F t(ti);
    const std::string at = " t=" + std::to_string(ti);
    const auto c = fam.connection(t);
    const auto h = hermitian_check(L, S, c);
    ck.zero("|nabla g|" + at, h.grad_g_norm);
    ck.zero("|nabla J|" + at, h.grad_J_norm);
    const auto T = torsion(L, c);
    const auto rep = torsion_type_report(S, T);
    if (ti == 1) ck.zero("|T^{1,1}|" + at, rep.norm_T11);
    if (ti == 0) ck.zero("|T^{2,0}|" + at, rep.norm_T20);
    ck.zero("|((T^{1,1})_b)^{1,1}|" + at, rep.norm_T11_b);
    if (flags.integrable && ti == -1) ck.zero("skew defect" + at, rep.skew_defect);
    if (flags.integrable) ck.zero("|nabla - reduced formula|" + at, c.max_abs_difference(reduced_canonical_connection(L, S, t)));
    if (flags.quasi_kahler) ck.zero("|nabla^t - nabla^1|" + at, c.max_abs_difference(chern));

    // theta four ways, and in a second unitary frame
    if (!h.hermitian()) continue;
    const auto th = theta_trace(L, S, t).vartheta;
    ck.zero("|theta_complex - theta_trace|" + at, detail::form_difference(theta_complex(L, S, t).vartheta, th));
    ck.zero("|theta_real - theta_trace|" + at, detail::form_difference(theta_real(L, S, t).vartheta, th));
    ck.zero("|theta(connection) - theta_trace|" + at, detail::form_difference(theta_connection(L, S, c, t).vartheta, th));
    std::vector<Vector<F>> seeds;
    for (int s = 0; s < 2; ++s) {
      Vector<F> v(n);
      for (auto& x : v) x = F(rng.uniform(-2, 2));
      seeds.push_back(v);
    }
    ck.zero("frame dependence" + at, detail::form_difference(theta_complex(L, S, t, seeds).vartheta, th));

    // the two Ricci routes, with the fixed ratio
    const auto rt = ricci_via_theta(L, S, t).rho_hat;
    const auto rc = ricci_via_curvature(L, S, c, t).rho_hat;
    ck.zero("|rho(curv) - kappa rho(theta)|" + at, detail::form_difference(rc, rt * F(kRicciRouteRatio)));
    ck.zero("|d rho|" + at, ce_differential(L, rt).max_abs());
  }
}

// ------------------------------------------------------------- runners

namespace detail {

using SampleFn = std::function<Instance(int index, std::uint64_t seed)>;

template <Field F>
using CheckFn = std::function<void(const LieAlgebra<F>&, const AlmostHermitianStructure<F>&, Checklist<F>&, std::uint64_t)>;

template <Field F>
void run_one(SuiteReport& rep, int index, std::uint64_t seed, const Instance& inst, const CheckFn<F>& check) {
  Checklist<F> ck;
  try {
    if constexpr (std::is_same_v<F, Rational>) {
      check(inst.algebra, inst.structure, ck, seed);
    } else {
      const auto L = inst.algebra.template convert<F>();
      const auto S = inst.structure.template convert<F>();
      check(L, S, ck, seed);
    }
  } catch (const std::exception& e) {
    ck.fail(std::string("exception: ") + e.what());
  }
  SampleVerdict v{index, seed, inst.name, ck.ok(), ck.residual(), ck.failures()};
  ++rep.samples;
  if (v.pass) ++rep.passed;
  if (v.residual > rep.max_residual) rep.max_residual = v.residual;
  if (!v.pass && !rep.witness) rep.witness = Witness{index, seed, inst.name, v.detail, inst.algebra, inst.structure};
  rep.verdicts.push_back(std::move(v));
}

template <Field F>
void run_samples(SuiteReport& rep, int count, int index_offset, const SampleSpec& spec, const SampleFn& make,
                 const CheckFn<F>& check) {
  for (int i = 0; i < count; ++i) {
    const int index = index_offset + i;
    const std::uint64_t s = sample_seed(spec.seed, std::uint64_t(index));
    Instance inst;
    try {
      inst = make(index, s);
    } catch (const std::exception& e) {
      ++rep.samples;
      rep.verdicts.push_back({index, s, "generator", false, 0, std::string("generator failed: ") + e.what()});
      continue;
    }
    run_one<F>(rep, index, s, inst, check);
  }
}

template <Field F>
SuiteReport with_timer(const std::string& name, const SampleSpec& spec, const std::function<void(SuiteReport&)>& body) {
  SuiteReport rep;
  rep.suite = name;
  rep.mode = spec.mode;
  rep.spec = spec;
  const auto t0 = std::chrono::steady_clock::now();
  body(rep);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace detail

/// Random 2-step instances (count of them) followed by count/5 (at least 1)
/// constructed cosymplectic 2-step instances, so both directions of the
/// biconditional are exercised.
template <Field F>
SuiteReport theorem1_suite_t(const SampleSpec& spec) {
  return detail::with_timer<F>("theorem1", spec, [&](SuiteReport& rep) {
    const detail::CheckFn<F> check = [](const auto& L, const auto& S, auto& ck, std::uint64_t) { theorem1_checks(L, S, ck); };
    int idx = 0;
    for (const auto& inst : curated_instances())
      if (is_two_step(inst.algebra)) detail::run_one<F>(rep, idx++, 0, inst, check);
    detail::run_samples<F>(rep, spec.count, idx, spec,
                           [&](int, std::uint64_t s) { return random_two_step_instance(spec.dim, s); }, check);
    detail::run_samples<F>(rep, std::max(1, spec.count / 5), idx + spec.count, spec,
                           [&](int, std::uint64_t s) { return random_cosymplectic_two_step(spec.dim, s); }, check);
    int cos = 0;
    for (const auto& v : rep.verdicts) cos += v.kind == "cosymplectic two-step";
    rep.observations.push_back(std::to_string(cos) + " constructed cosymplectic samples");
  });
}

/// Cosymplectic instances of several kinds must have t-independent Ricci
/// forms. Non-cosymplectic unimodular instances must not (negative control).
template <Field F>
SuiteReport corollary33_suite_t(const SampleSpec& spec) {
  return detail::with_timer<F>("corollary33", spec, [&](SuiteReport& rep) {
    const detail::CheckFn<F> positive = [](const auto& L, const auto& S, auto& ck, std::uint64_t) {
      ck.require("instance is cosymplectic", is_cosymplectic(L, S));
      t_independence_checks(L, S, ck);
    };
    const detail::CheckFn<F> negative = [](const auto& L, const auto& S, auto& ck, std::uint64_t) {
      ck.require("instance is unimodular", is_unimodular(L));
      const bool cos = is_cosymplectic(L, S);
      const bool dep = ricci_depends_on_t(L, S);
      if (dep == cos) ck.fail(std::string("rho^t ") + (dep ? "depends" : "does not depend") + " on t but cosymplectic = " + (cos ? "true" : "false"));
    };
    const int n = spec.dim;
    int idx = 0;
    for (const auto& inst : curated_instances()) {
      const auto flags = class_predicates(inst.algebra, inst.structure);
      if (flags.cosymplectic) detail::run_one<F>(rep, idx, 0, inst, positive);
      else if (is_unimodular(inst.algebra)) detail::run_one<F>(rep, idx, 0, inst, negative);
      ++idx;
    }
    detail::run_samples<F>(rep, spec.count, idx, spec, [&](int i, std::uint64_t s) -> Instance {
      switch (i % 4) {
        case 0: return random_cosymplectic_two_step(n, s);
        case 1: return random_cosymplectic_semidirect(n, s);
        case 2: {
          auto S = random_compatible_structure(n, s);
          return {"kahler (abelian algebra)", LieAlgebra<Rational>::abelian(n), std::move(S)};
        }
        default:
          if (n >= 6) return random_class_instance(n, StructureClass::anti_abelian, s);
          return random_cosymplectic_semidirect(n, splitmix64(s));
      }
    }, positive);
    const int neg = std::max(1, spec.count / 4);
    detail::run_samples<F>(rep, neg, idx + spec.count, spec, [&](int i, std::uint64_t s) -> Instance {
      if (i % 2) return random_two_step_instance(n, s);
      Rng rng(s);
      Matrix<Rational> A(n - 1, n - 1);
      for (int a = 0; a < n - 1; ++a)
        for (int b = 0; b < n - 1; ++b) A(a, b) = rng.small(2);
      A(n - 2, n - 2) -= A.trace();
      return {"unimodular semidirect", semidirect_algebra(A), random_compatible_structure(n, rng.next())};
    }, negative);
  });
}

/// Instances of the four classes (2-step constructions with the class
/// projected in, plus curated non-unimodular examples).
template <Field F>
SuiteReport prop42_suite_t(const SampleSpec& spec) {
  return detail::with_timer<F>("prop42", spec, [&](SuiteReport& rep) {
    const StructureClass classes[] = {StructureClass::bi_invariant, StructureClass::anti_bi_invariant, StructureClass::abelian,
                                      StructureClass::anti_abelian};
    int idx = 0;
    for (const auto& inst : curated_instances())
      for (auto cls : classes) {
        if (!has_class(inst.algebra, inst.structure, cls)) continue;
        detail::run_one<F>(rep, idx++, 0, inst, [cls](const auto& L, const auto& S, auto& ck, std::uint64_t) { class_checks(L, S, cls, ck); });
      }
    for (auto cls : classes) {
      const int n = cls == StructureClass::abelian ? spec.dim : std::max(spec.dim, 6);
      const bool cos_possible = n >= 6;
      detail::run_samples<F>(rep, spec.count, idx, spec, [&](int i, std::uint64_t s) {
        return random_class_instance(n, cls, s, cls == StructureClass::abelian && cos_possible && i % 2 == 1);
      }, [cls](const auto& L, const auto& S, auto& ck, std::uint64_t) { class_checks(L, S, cls, ck); });
      idx += spec.count;
    }
    // behaviour of abelian-J instances at t = 0 and t = 1, kept separate
    int cos = 0, flat0 = 0, flat1 = 0, total = 0;
    for (int i = 0; i < 10; ++i) {
      const int n = std::max(spec.dim, 6);
      const auto inst = random_class_instance(n, StructureClass::abelian, sample_seed(spec.seed ^ 0xab1u, std::uint64_t(i)), i % 2 == 1);
      ++total;
      cos += is_cosymplectic(inst.algebra, inst.structure);
      flat0 += ricci_via_theta(inst.algebra, inst.structure, Rational(0)).is_zero();
      flat1 += ricci_via_theta(inst.algebra, inst.structure, Rational(1)).is_zero();
    }
    rep.observations.push_back("abelian J, " + std::to_string(total) + " instances (" + std::to_string(cos) +
                               " cosymplectic): rho^0 = 0 for " + std::to_string(flat0) + ", rho^1 = 0 for " +
                               std::to_string(flat1));
  });
}

/// The cross-validation battery over mixed instance kinds: random 2-step,
/// random semidirect products (generally not unimodular), nilpotent
/// semidirect products of higher step, and the curated set.
template <Field F>
SuiteReport consistency_suite_t(const SampleSpec& spec) {
  return detail::with_timer<F>("consistency", spec, [&](SuiteReport& rep) {
    const detail::CheckFn<F> check = [](const auto& L, const auto& S, auto& ck, std::uint64_t s) { consistency_checks(L, S, ck, s); };
    int idx = 0;
    for (const auto& inst : curated_instances()) detail::run_one<F>(rep, idx++, 0, inst, check);
    const int n = spec.dim;
    detail::run_samples<F>(rep, spec.count, idx, spec, [&](int i, std::uint64_t s) -> Instance {
      Rng rng(s);
      switch (i % 3) {
        case 0: return random_two_step_instance(n, s);
        case 1: {
          Matrix<Rational> A(n - 1, n - 1);
          for (int a = 0; a < n - 1; ++a)
            for (int b = 0; b < n - 1; ++b) A(a, b) = rng.small(2);
          return {"semidirect", semidirect_algebra(A), random_compatible_structure(n, rng.next())};
        }
        default: {
          Matrix<Rational> A(n - 1, n - 1);
          for (int a = 0; a < n - 1; ++a)
            for (int b = a + 1; b < n - 1; ++b) A(a, b) = rng.small(2);
          return {"nilpotent semidirect", semidirect_algebra(A), random_compatible_structure(n, rng.next())};
        }
      }
    }, check);
    // exploratory, not asserted: the Chern-Ricci form on the 3-step algebra
    // (0,0,12,13) under the curated and 20 random structures
    const auto three = parse_notation("(0,0,12,13)");
    for (const char* name : {"three-step standard", "three-step twisted"}) {
      const auto ts = curated_instance(name);
      rep.observations.push_back(std::string(name) + ": |rho^1| = " +
                                 to_string(ricci_via_theta(ts.algebra, ts.structure, Rational(1)).rho_hat.max_abs()));
    }
    int nonflat = 0;
    Rational largest(0);
    for (int i = 0; i < 20; ++i) {
      const auto S = random_compatible_structure(4, sample_seed(spec.seed ^ 0x3570u, std::uint64_t(i)));
      const auto m = ricci_via_theta(three, S, Rational(1)).rho_hat.max_abs();
      nonflat += m != 0;
      if (m > largest) largest = m;
    }
    rep.observations.push_back("(0,0,12,13) with random structures: rho^1 != 0 for " + std::to_string(nonflat) +
                               "/20, max |rho^1| = " + to_string(largest));
  });
}

/// Exact and floating evaluation of the same instances: largest deviation
/// of vartheta^t and rho_hat^t over t in {-1, 0, 1, 2}.
struct BackendComparison {
  int samples = 0;
  double max_deviation = 0;
  std::optional<int> worst_index;
};

inline BackendComparison compare_backends(const SampleSpec& spec) {
  BackendComparison out;
  for (int i = 0; i < spec.count; ++i) {
    const auto s = sample_seed(spec.seed, std::uint64_t(i));
    const Instance inst = i % 2 ? random_cosymplectic_two_step(spec.dim, s) : random_two_step_instance(spec.dim, s);
    const auto Lf = inst.algebra.convert<double>();
    const auto Sf = inst.structure.convert<double>();
    double dev = 0;
    for (int ti : {-1, 0, 1, 2}) {
      const auto te = theta_trace(inst.algebra, inst.structure, Rational(ti)).vartheta;
      const auto tf = theta_trace(Lf, Sf, double(ti)).vartheta;
      const auto re = ricci_via_theta(inst.algebra, inst.structure, Rational(ti)).rho_hat;
      const auto rf = ricci_via_theta(Lf, Sf, double(ti)).rho_hat;
      for (std::size_t q = 0; q < te.size(); ++q) dev = std::max(dev, std::abs(te[q].get_d() - tf[q]));
      for (std::size_t q = 0; q < re.size(); ++q) dev = std::max(dev, std::abs(re[q].get_d() - rf[q]));
    }
    ++out.samples;
    if (dev > out.max_deviation || !out.worst_index) {
      if (dev >= out.max_deviation) out.worst_index = i;
      out.max_deviation = std::max(out.max_deviation, dev);
    }
  }
  return out;
}

template <Field F>
SuiteReport run_suite_t(const std::string& name, const SampleSpec& spec) {
  if (name == "theorem1") return theorem1_suite_t<F>(spec);
  if (name == "corollary33") return corollary33_suite_t<F>(spec);
  if (name == "prop42") return prop42_suite_t<F>(spec);
  if (name == "consistency") return consistency_suite_t<F>(spec);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

inline bool is_suite_name(const std::string& name) {
  return name == "theorem1" || name == "corollary33" || name == "prop42" || name == "consistency" || name == "all";
}

/// Dispatches on spec.mode.
inline SuiteReport run_suite(const std::string& name, const SampleSpec& spec) {
  return spec.mode == Mode::exact ? run_suite_t<Rational>(name, spec) : run_suite_t<double>(name, spec);
}

inline SuiteReport theorem1_suite(const SampleSpec& s) { return run_suite("theorem1", s); }
inline SuiteReport corollary33_suite(const SampleSpec& s) { return run_suite("corollary33", s); }
inline SuiteReport prop42_suite(const SampleSpec& s) { return run_suite("prop42", s); }
inline SuiteReport consistency_suite(const SampleSpec& s) { return run_suite("consistency", s); }

}  // namespace hermlie
