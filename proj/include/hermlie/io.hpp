#pragma once

// JSON problem documents and reports. Exact values are written as "p/q"
// strings so a document round-trips without loss; objects use nlohmann's
// sorted maps, so identical inputs give byte-identical output.

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hermlie/classes.hpp"
#include "hermlie/connection.hpp"
#include "hermlie/notation.hpp"
#include "hermlie/ricci.hpp"
#include "hermlie/verifier.hpp"

namespace hermlie {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Problem {
  LieAlgebra<Rational> algebra;
  AlmostHermitianStructure<Rational> structure;
};

inline json to_json_value(const Rational& x) { return to_string(x); }
inline json to_json_value(double x) { return x == 0 ? 0.0 : x; }

inline Rational rational_from_json(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception&) {
      throw SchemaError(where + ": '" + v.get<std::string>() + "' is not a rational number");
    }
  }
  throw SchemaError(where + ": expected an integer or a \"p/q\" string");
}

template <Field F>
json matrix_json(const Matrix<F>& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json_value(m(i, j)));
    out.push_back(row);
  }
  return out;
}

inline Matrix<Rational> matrix_from_json(const json& v, int n, const std::string& key) {
  if (!v.is_array() || int(v.size()) != n) throw SchemaError(key + ": expected " + std::to_string(n) + " rows");
  Matrix<Rational> m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!v[i].is_array() || int(v[i].size()) != n)
      throw SchemaError(key + ": row " + std::to_string(i + 1) + " must have " + std::to_string(n) + " entries");
    for (int j = 0; j < n; ++j)
      m(i, j) = rational_from_json(v[i][j], key + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
  }
  return m;
}

template <Field F>
json vector_json(const std::vector<F>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json_value(x));
  return out;
}

/// Validates a problem document: algebra (notation or 1-based structure
/// constants), then metric and J with defaults (identity, standard pairing).
/// Throws SchemaError, ParseError, JacobiError or StructureError.
inline Problem problem_from_json(const json& doc) {
  if (!doc.is_object()) throw SchemaError("document must be a JSON object");
  static const std::set<std::string> known = {"dim", "notation", "structure_constants", "metric", "J"};
  for (const auto& [key, _] : doc.items())
    if (!known.count(key)) throw SchemaError("unknown field '" + key + "'");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw SchemaError("'dim' must be an integer");
  const int n = doc["dim"].get<int>();
  if (n < 1) throw SchemaError("'dim' must be positive");
  const bool has_notation = doc.contains("notation"), has_constants = doc.contains("structure_constants");
  if (has_notation == has_constants) throw SchemaError("exactly one of 'notation' and 'structure_constants' is required");

  LieAlgebra<Rational> L = LieAlgebra<Rational>::abelian(n);
  if (has_notation) {
    if (!doc["notation"].is_string()) throw SchemaError("'notation' must be a string");
    L = parse_notation(doc["notation"].get<std::string>());
    if (L.dim() != n)
      throw SchemaError("notation has " + std::to_string(L.dim()) + " slots but dim is " + std::to_string(n));
  } else {
    const auto& sc = doc["structure_constants"];
    if (!sc.is_array()) throw SchemaError("'structure_constants' must be an array");
    std::vector<Rational> c(std::size_t(n) * n * n);
    for (std::size_t q = 0; q < sc.size(); ++q) {
      const auto& e = sc[q];
      const std::string where = "structure_constants[" + std::to_string(q) + "]";
      if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
          !e[2].is_number_integer())
        throw SchemaError(where + ": expected [i, j, k, \"p/q\"]");
      const int i = e[0].get<int>() - 1, j = e[1].get<int>() - 1, k = e[2].get<int>() - 1;
      if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n) throw SchemaError(where + ": index out of range 1.." + std::to_string(n));
      if (i == j) throw SchemaError(where + ": [e_i, e_i] must vanish");
      const Rational v = rational_from_json(e[3], where);
      c[(std::size_t(i) * n + j) * n + k] += v;
      c[(std::size_t(j) * n + i) * n + k] -= v;
    }
    L = LieAlgebra<Rational>::from_constants(n, std::move(c));
  }
  if (n % 2 != 0) throw StructureError("odd dimension");
  const auto g = doc.contains("metric") ? matrix_from_json(doc["metric"], n, "metric") : Matrix<Rational>::identity(n);
  const auto J = doc.contains("J") ? matrix_from_json(doc["J"], n, "J") : standard_complex_structure<Rational>(n);
  return {std::move(L), validate_structure(L, g, J)};
}

inline json problem_to_json(const LieAlgebra<Rational>& L, const AlmostHermitianStructure<Rational>& S) {
  return json{{"dim", L.dim()}, {"notation", serialize_notation(L)}, {"metric", matrix_json(S.g())}, {"J", matrix_json(S.J())}};
}

inline json problem_to_json(const Problem& p) { return problem_to_json(p.algebra, p.structure); }

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

inline Problem load_problem(const std::string& path) { return problem_from_json(read_json_file(path)); }
inline void save_problem(const std::string& path, const Problem& p) { write_json_file(path, problem_to_json(p)); }
inline void save_report(const std::string& path, const json& report) { write_json_file(path, report); }

// ------------------------------------------------------------- reports

inline std::string t_key(const Rational& t) { return to_string(t); }

inline json flags_json(const ClassFlags& f, bool unimodular) {
  return json{{"integrable", f.integrable},
              {"kahler", f.kahler},
              {"almost_kahler", f.almost_kahler},
              {"quasi_kahler", f.quasi_kahler},
              {"cosymplectic", f.cosymplectic},
              {"unimodular", unimodular},
              {"bi_invariant", f.bi_invariant},
              {"anti_bi_invariant", f.anti_bi_invariant},
              {"abelian_J", f.abelian_J},
              {"anti_abelian_J", f.anti_abelian_J}};
}

inline const char* conventions_note() {
  return "c(i,j,k) = e^k([e_i,e_j]); notation term ij with coefficient a in slot k means c(i,j,k) = -a. "
         "theta = i*vartheta and rho = i*rho_hat; vartheta and rho_hat are reported. "
         "The canonical family uses g(nabla^t_X Y, Z) = g(D_X Y, Z) + (t-1)/4 P + (t+1)/4 P(X,JY,JZ) "
         "- 1/4 g(X, N(Y,Z)) + 1/2 M with P, M the (+), (-) parts of d^c omega; the Nijenhuis coefficient is "
         "-1/4, not -1, since -1 fails nabla J = 0.";
}

/// Nonzero coefficients keyed by 1-based index lists, e.g. {"1,2,3": "-1"}.
template <Field F>
json form_json(const KForm<F>& a) {
  json out = json::object();
  for (std::size_t q = 0; q < a.size(); ++q) {
    if (is_zero(a[q])) continue;
    std::string key;
    for (int i : detail::mask_indices(a.mask(q))) key += (key.empty() ? "" : ",") + std::to_string(i + 1);
    out[key] = to_json_value(a[q]);
  }
  return out;
}

/// The full analysis of one problem at the given t values, evaluated in F.
template <Field F>
json analysis_json(const Problem& p, const std::vector<Rational>& ts) {
  const auto L = p.algebra.convert<F>();
  const auto S = p.structure.convert<F>();
  const int n = L.dim();
  const CanonicalFamily<F> fam(L, S);
  json theta = json::object(), ricci = json::object(), torsion_types = json::object(), hermitian = json::object();
  for (const auto& tq : ts) {
    const F t = from_rational<F>(tq);
    const auto c = fam.connection(t);
    const auto h = hermitian_check(L, S, c);
    const auto rep = torsion_type_report(S, torsion(L, c));
    hermitian[t_key(tq)] = json{{"nabla_g", to_json_value(h.grad_g_norm)}, {"nabla_J", to_json_value(h.grad_J_norm)}};
    torsion_types[t_key(tq)] = json{{"T11", to_json_value(rep.norm_T11)},
                                    {"T20", to_json_value(rep.norm_T20)},
                                    {"T02", to_json_value(rep.norm_T02)},
                                    {"T11_b", to_json_value(rep.norm_T11_b)},
                                    {"skew_defect", to_json_value(rep.skew_defect)}};
    theta[t_key(tq)] = vector_json(components(theta_trace(L, S, t).vartheta));
    ricci[t_key(tq)] = matrix_json(to_matrix(ricci_via_theta(L, S, t).rho_hat));
  }
  const auto delta = codifferential(L, S, fundamental_form(S));
  return json{{"input", problem_to_json(p)},
              {"classes", flags_json(class_predicates(L, S), is_unimodular(L))},
              {"theta", theta},
              {"ricci", ricci},
              {"torsion_types", torsion_types},
              {"hermitian", hermitian},
              {"d_omega", n > 2 ? form_json(ce_differential(L, fundamental_form(S))) : json::object()},
              {"delta_omega", vector_json(components(delta))},
              {"kappa", kRicciRouteRatio},
              {"version", kVersion},
              {"conventions", conventions_note()},
              {"dim", n}};
}

inline json analysis_json(const Problem& p, const std::vector<Rational>& ts, Mode mode) {
  json out = mode == Mode::exact ? analysis_json<Rational>(p, ts) : analysis_json<double>(p, ts);
  out["mode"] = to_string(mode);
  out["eps"] = epsilon();
  return out;
}

inline json witness_json(const Witness& w) {
  return json{{"index", w.index},
              {"seed", w.seed},
              {"kind", w.kind},
              {"reason", w.reason},
              {"problem", problem_to_json(w.algebra, w.structure)}};
}

inline json suite_json(const SuiteReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back(json{{"index", v.index},
                            {"seed", v.seed},
                            {"kind", v.kind},
                            {"pass", v.pass},
                            {"residual", v.residual},
                            {"detail", v.detail}});
  return json{{"suite", r.suite},
              {"spec", json{{"dim", r.spec.dim}, {"step", r.spec.step}, {"seed", r.spec.seed}, {"count", r.spec.count}}},
              {"mode", to_string(r.mode)},
              {"eps", epsilon()},
              {"kappa", kRicciRouteRatio},
              {"version", kVersion},
              {"samples", r.samples},
              {"passed", r.passed},
              {"max_residual", r.max_residual},
              {"verdicts", verdicts},
              {"witness", r.witness ? witness_json(*r.witness) : json(nullptr)},
              {"observations", r.observations}};
}

}  // namespace hermlie
