#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "tug/errors.hpp"

namespace tug {

/// Exact arithmetic scalar used by the rational compute mode. Expression
/// templates are disabled so arithmetic yields plain Rational values.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::cpp_int;

/// Absolute-or-relative comparison tolerance for value-level equality.
inline constexpr double kTolEq = 1e-9;
/// Absolute tolerance on marginal contributions in null-player detection.
inline constexpr double kTolNull = 1e-9;
/// Axiom-checker verdict tolerance (looser: reduced games compound rounding).
inline constexpr double kTolCheck = 1e-7;

template <class R>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* mode_name = "float";
  static double zero() { return 0.0; }
  static double from_long(long long k) { return static_cast<double>(k); }
  static double from_rational(const Rational& r) { return r.convert_to<double>(); }
  static double to_double(double x) { return x; }
  static bool finite(double x) { return std::isfinite(x); }
  static double abs(double x) { return std::fabs(x); }
  // |a-b| <= tol * max(1, |a|, |b|): absolute near zero, relative when large.
  static bool close(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
  }
  /// Shortest decimal string that round-trips to the same double.
  static std::string str(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
  }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* mode_name = "rational";
  static Rational zero() { return Rational(0); }
  static Rational from_long(long long k) { return Rational(k); }
  static Rational from_rational(const Rational& r) { return r; }
  static double to_double(const Rational& r) { return r.convert_to<double>(); }
  static bool finite(const Rational&) { return true; }
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
  static bool close(const Rational& a, const Rational& b, double /*tol*/) { return a == b; }
  static std::string str(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }
};

template <class R>
bool close(const R& a, const R& b, double tol = kTolEq) {
  return ScalarTraits<R>::close(a, b, tol);
}

inline BigInt factorial_big(int k) {
  BigInt out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

inline BigInt binomial_big(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

/// Exact ratio num/den converted into the scalar type (keeps n! ratios
/// out of double's integer range before the final conversion).
template <class R>
R fraction_as(const BigInt& num, const BigInt& den) {
  return ScalarTraits<R>::from_rational(Rational(num, den));
}

template <class R>
R binomial_as(int n, int k) {
  return ScalarTraits<R>::from_rational(Rational(binomial_big(n, k)));
}

namespace detail {

/// Decimal-digit string (optional sign) to BigInt. cpp_int's own string
/// constructor would read leading zeros as octal.
inline BigInt big_from_decimal(const std::string& digits) {
  std::string s = digits;
  bool negative = false;
  std::size_t start = 0;
  if (start < s.size() && (s[start] == '+' || s[start] == '-')) {
    negative = s[start] == '-';
    ++start;
  }
  while (start + 1 < s.size() && s[start] == '0') ++start;
  const std::string body = s.substr(start);
  if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
    throw Error("bad integer literal '" + digits + "'");
  BigInt out(body);
  return negative ? BigInt(-out) : out;
}

}  // namespace detail

/// Parses "p/q", integer, or decimal literals into the scalar type.
/// Decimal strings become exact digits/10^k rationals in exact mode.
template <class R>
R parse_scalar(const std::string& text) {
  const std::string s = [&] {
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' ' || c == '\t'; }),
            t.end());
    return t;
  }();
  if (s.empty()) throw Error("empty numeric literal");
  const auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      const BigInt num = detail::big_from_decimal(s.substr(0, slash));
      const BigInt den = detail::big_from_decimal(s.substr(slash + 1));
      if (den == 0) throw Error("zero denominator in '" + text + "'");
      return ScalarTraits<R>::from_rational(Rational(num, den));
    }
    const auto dot = s.find_first_of(".eE");
    if (dot == std::string::npos) {
      return ScalarTraits<R>::from_rational(Rational(detail::big_from_decimal(s)));
    }
    if constexpr (ScalarTraits<R>::exact) {
      // decimal like -12.625 (exponents unsupported in exact fixtures)
      if (s.find_first_of("eE") != std::string::npos)
        throw Error("exponent literal '" + text + "' not supported in rational mode");
      const auto point = s.find('.');
      std::string digits = s.substr(0, point) + s.substr(point + 1);
      const int frac_len = static_cast<int>(s.size() - point - 1);
      BigInt den = 1;
      for (int i = 0; i < frac_len; ++i) den *= 10;
      return ScalarTraits<R>::from_rational(Rational(detail::big_from_decimal(digits), den));
    } else {
      double out = 0.0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error("bad numeric literal '" + text + "'");
      return out;
    }
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("bad numeric literal '" + text + "'");
  }
}

}  // namespace tug
