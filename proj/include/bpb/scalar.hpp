#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace bpb {

/// Exact scalar. Always kept in canonical form by GMP.
using Rational = mpq_class;

enum class ArithmeticMode { Rational, Float };

ArithmeticMode parse_mode(std::string_view text);
std::string_view to_string(ArithmeticMode mode);

/// Parses "p/q", an integer, or a decimal literal ("0.125", "-1.5e-3") exactly.
/// Throws Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always renders "p/q", including q = 1.
std::string format_rational(const Rational& value);

/// Correctly rounded conversion (mpq_get_d truncates).
double to_double(const Rational& value);

std::string format_double(double value);

/// Absolute tolerance used by float-mode comparisons. Set once at startup.
double float_tolerance();
void set_float_tolerance(double tol);

/// Support threshold for float mode: g_j counts as nonzero iff g_j > this.
inline constexpr double kFloatSupportThreshold = 1e-12;

template <class Real>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr ArithmeticMode mode = ArithmeticMode::Rational;

  static Rational abs(const Rational& a) { return ::abs(a); }
  static Rational from_int(long v) { return Rational(v); }
  static Rational ratio(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  static Rational from_rational(const Rational& r) { return r; }
  static Rational parse(std::string_view text) { return parse_rational(text); }
  static std::string format(const Rational& a) { return format_rational(a); }
  static double to_double(const Rational& a) { return bpb::to_double(a); }

  // Tolerant comparisons used for certification; exact here.
  static bool eq(const Rational& a, const Rational& b) { return a == b; }
  static bool le(const Rational& a, const Rational& b) { return a <= b; }
  static bool lt(const Rational& a, const Rational& b) { return a < b; }

  static bool in_support(const Rational& a) { return sgn(a) > 0; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr ArithmeticMode mode = ArithmeticMode::Float;

  static double abs(double a) { return std::fabs(a); }
  static double from_int(long v) { return static_cast<double>(v); }
  static double ratio(long p, long q) { return static_cast<double>(p) / static_cast<double>(q); }
  static double from_rational(const Rational& r) { return bpb::to_double(r); }
  static double parse(std::string_view text);
  static std::string format(double a) { return format_double(a); }
  static double to_double(double a) { return a; }

  static bool eq(double a, double b) { return std::fabs(a - b) <= float_tolerance(); }
  static bool le(double a, double b) { return a <= b + float_tolerance(); }
  // Strict inequalities cannot be certified in floating point; this accepts
  // a < b up to the tolerance band.
  static bool lt(double a, double b) { return a < b + float_tolerance(); }

  static bool in_support(double a) { return a > kFloatSupportThreshold; }
};

template <class Real>
Real abs_value(const Real& a) {
  return ScalarTraits<Real>::abs(a);
}

}  // namespace bpb
