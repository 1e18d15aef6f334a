#include "bpb/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include <mpfr.h>

#include "bpb/error.hpp"

namespace bpb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::ZeroOperator: return "ZeroOperator";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::EpsOutOfRange: return "EpsOutOfRange";
    case ErrorCode::VectorOutOfBall: return "VectorOutOfBall";
    case ErrorCode::NotNearNorming: return "NotNearNorming";
    case ErrorCode::NotUnitNorm: return "NotUnitNorm";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::TailNotDeclared: return "TailNotDeclared";
    case ErrorCode::InfeasiblePerturbation: return "InfeasiblePerturbation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InputsEqual: return "InputsEqual";
    case ErrorCode::NotUnitVectors: return "NotUnitVectors";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

ArithmeticMode parse_mode(std::string_view text) {
  if (text == "rational" || text == "exact") return ArithmeticMode::Rational;
  if (text == "float" || text == "double") return ArithmeticMode::Float;
  throw Error(ErrorCode::InvalidArgument, "unknown arithmetic mode '" + std::string(text) + "'");
}

std::string_view to_string(ArithmeticMode mode) {
  return mode == ArithmeticMode::Rational ? "rational" : "float";
}

namespace {

[[noreturn]] void bad_number(std::string_view text, const char* why) {
  throw Error(ErrorCode::ParseError, "cannot parse number '" + std::string(text) + "': " + why);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  bool neg = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    neg = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) bad_number(whole, "expected digits");
  mpz_class z(std::string(text), 10);
  return neg ? mpz_class(-z) : z;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    if (!exp_part.empty() && exp_part.front() == '+') exp_part.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), exponent);
    if (ec != std::errc() || ptr != exp_part.data() + exp_part.size() || exp_part.empty())
      bad_number(text, "bad exponent");
    if (exponent > 4000 || exponent < -4000) bad_number(text, "exponent out of range");
    s = s.substr(0, e);
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) bad_number(text, "no digits");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      bad_number(text, "expected digits");
    digits = std::string(ip) + std::string(fp);
    frac_len = static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) bad_number(text, "expected digits");
    digits = std::string(s);
  }
  mpz_class num(digits, 10);
  long shift = exponent - frac_len;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational r = shift >= 0 ? Rational(num * scale) : Rational(num, scale);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) bad_number(text, "empty");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class p = parse_integer(text.substr(0, slash), text);
    mpz_class q = parse_integer(text.substr(slash + 1), text);
    if (q == 0) bad_number(text, "zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  return parse_decimal(text);
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) {
  // Both parts exactly representable: IEEE division rounds correctly.
  constexpr unsigned kMantissa = std::numeric_limits<double>::digits;
  if (mpz_sizeinbase(value.get_num_mpz_t(), 2) <= kMantissa &&
      mpz_sizeinbase(value.get_den_mpz_t(), 2) <= kMantissa)
    return value.get_num().get_d() / value.get_den().get_d();
  mpfr_t tmp;
  mpfr_init2(tmp, kMantissa);
  mpfr_set_q(tmp, value.get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return d;
}

std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return std::string(buf, ptr);
}

namespace {
double g_float_tolerance = 1e-12;
}

double float_tolerance() { return g_float_tolerance; }
void set_float_tolerance(double tol) {
  require(tol >= 0.0 && std::isfinite(tol), ErrorCode::InvalidArgument, "tolerance must be finite and >= 0");
  g_float_tolerance = tol;
}

double ScalarTraits<double>::parse(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return bpb::to_double(parse_rational(text));
  std::string s(text);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || !std::isfinite(v)) bad_number(text, "not a finite float");
  return v;
}

}  // namespace bpb
