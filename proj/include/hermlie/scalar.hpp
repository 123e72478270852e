#pragma once

// Scalar backends. Every algorithm in the library is a template over the
// field type F; two instantiations are supported:
//   Rational (GMP mpq_class)  exact, zero tests are exact
//   double                    "zero" means |x| < epsilon()

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hermlie {

using Rational = mpq_class;

/// Global zero tolerance for the floating backend (default 1e-9).
inline double& epsilon() {
  static double eps = 1e-9;
  return eps;
}

template <class F>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";

  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static int sign(const Rational& x) { return sgn(x); }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational abs(const Rational& x) { return Rational(::abs(x)); }
  static std::string to_string(const Rational& x) { return x.get_str(); }
  static Rational from_rational(const Rational& x) { return x; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";

  static bool is_zero(double x) { return std::abs(x) < epsilon(); }
  static int sign(double x) { return is_zero(x) ? 0 : (x > 0 ? 1 : -1); }
  static double to_double(double x) { return x; }
  static double abs(double x) { return std::abs(x); }
  static std::string to_string(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
  static double from_rational(const Rational& x) { return x.get_d(); }
};

template <class F>
concept Field = requires { ScalarTraits<F>::exact; };

template <Field F>
bool is_zero(const F& x) {
  return ScalarTraits<F>::is_zero(x);
}

template <Field F>
F abs_value(const F& x) {
  return ScalarTraits<F>::abs(x);
}

template <Field F>
double to_double(const F& x) {
  return ScalarTraits<F>::to_double(x);
}

template <Field F>
std::string to_string(const F& x) {
  return ScalarTraits<F>::to_string(x);
}

/// Converts an exact rational into the target backend.
template <Field F>
F from_rational(const Rational& x) {
  return ScalarTraits<F>::from_rational(x);
}

/// p/q in canonical form.
inline Rational ratio(long p, long q = 1) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" (no spaces). Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!is_digits(num) || (slash != std::string_view::npos && !is_digits(den)))
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  std::string canonical(text.front() == '+' ? text.substr(1) : text);
  Rational r;
  if (r.set_str(canonical, 10) != 0) throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

/// Keeps the larger magnitude in `acc`.
template <Field F>
void update_max_abs(F& acc, const F& x) {
  F a = abs_value(x);
  if (a > acc) acc = a;
}

}  // namespace hermlie
