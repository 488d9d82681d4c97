#include "latshift/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "latshift/error.hpp"

namespace latshift {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(std::string_view text) {
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string exp_part(text.substr(e + 1));
    std::string_view digits = exp_part;
    if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) digits.remove_prefix(1);
    if (!all_digits(digits)) throw DomainError("malformed number: " + std::string(text));
    exponent = std::strtol(exp_part.c_str(), nullptr, 10);
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '+' || mantissa[0] == '-')) {
    negative = mantissa[0] == '-';
    mantissa.remove_prefix(1);
  }
  std::string_view int_part = mantissa;
  std::string_view frac_part;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part)))
    throw DomainError("malformed number: " + std::string(text));

  std::string digits = std::string(int_part) + std::string(frac_part);
  BigInt num(digits.empty() ? "0" : digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational q = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (sgn(den) == 0) throw DomainError("zero denominator: " + std::string(text));
    Rational q = num / den;
    q.canonicalize();
    return q;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational ipow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0 && sgn(base) == 0) throw DomainError("zero raised to a negative power");
  auto e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  if (exponent < 0) out = 1 / out;
  return out;
}

Complex ipow(const Complex& base, std::int64_t exponent) {
  Complex out{1.0, 0.0};
  Complex b = exponent < 0 ? Complex{1.0, 0.0} / base : base;
  auto e = static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent);
  while (e) {
    if (e & 1u) out *= b;
    b *= b;
    e >>= 1u;
  }
  return out;
}

double log_abs(const Rational& q) {
  if (sgn(q) == 0) return -HUGE_VAL;
  long num_exp = 0;
  long den_exp = 0;
  double num_m = mpz_get_d_2exp(&num_exp, q.get_num_mpz_t());
  double den_m = mpz_get_d_2exp(&den_exp, q.get_den_mpz_t());
  return std::log(std::fabs(num_m)) - std::log(den_m) +
         static_cast<double>(num_exp - den_exp) * std::log(2.0);
}

}  // namespace latshift
