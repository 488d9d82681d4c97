#pragma once

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace latshift {

using Rational = mpq_class;
using BigInt = mpz_class;
using Complex = std::complex<double>;

// Field values come in two flavours that are never mixed inside one
// computation: exact rationals and complex doubles.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  using Magnitude = Rational;
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";

  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Magnitude abs(const Rational& x) { return ::abs(x); }
  static Rational from_integer(const BigInt& z) { return Rational(z); }
  static Rational from_int(std::int64_t z) { return Rational(static_cast<long>(z)); }
  static double to_double(const Magnitude& m) { return m.get_d(); }
};

template <>
struct ScalarTraits<Complex> {
  using Magnitude = double;
  static constexpr bool exact = false;
  static constexpr const char* name = "float";

  static bool is_zero(const Complex& x) { return x == Complex{}; }
  static Magnitude abs(const Complex& x) { return std::abs(x); }
  static Complex from_integer(const BigInt& z) { return {z.get_d(), 0.0}; }
  static Complex from_int(std::int64_t z) { return {static_cast<double>(z), 0.0}; }
  static double to_double(const Magnitude& m) { return m; }
};

template <class S>
concept Scalar = requires { ScalarTraits<S>::exact; };

template <Scalar S>
using Magnitude = typename ScalarTraits<S>::Magnitude;

/// Parses "3", "-3/2", "0.125", "1e-3", "2.5E2" into an exact rational.
/// Throws DomainError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form "num" or "num/den".
std::string to_string(const Rational& q);

/// Big-integer binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Exact integer power, negative exponents allowed for nonzero base.
Rational ipow(const Rational& base, std::int64_t exponent);
Complex ipow(const Complex& base, std::int64_t exponent);

/// Natural logarithm of |q| without overflowing through double.
double log_abs(const Rational& q);

}  // namespace latshift
