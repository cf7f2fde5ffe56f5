#include "bg/rational.hpp"

#include <stdexcept>

namespace bg {

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_text(num, true) || (slash != std::string_view::npos && !is_integer_text(den, false))) {
    throw std::invalid_argument("not a rational literal: \"" + std::string(text) + "\"");
  }
  Rational q;
  q.get_num() = BigInt(std::string(num));
  q.get_den() = slash == std::string_view::npos ? BigInt(1) : BigInt(std::string(den));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_decimal(const Rational& q, int digits, DecimalMode mode) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = q < 0;
  const Rational a = negative ? Rational(-q) : q;
  Rational scaled = a * scale;
  BigInt units = scaled.get_num() / scaled.get_den();
  if (mode == DecimalMode::round_half_up && (scaled - units) * 2 >= 1) units += 1;
  std::string body = units.get_str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return (negative && units != 0 ? "-" : "") + body;
}

std::string to_scientific(const Rational& q, int significant) {
  if (q == 0) return "0";
  const bool negative = q < 0;
  Rational a = negative ? Rational(-q) : q;
  int exponent = 0;
  while (a >= 10) {
    a /= 10;
    ++exponent;
  }
  while (a < 1) {
    a *= 10;
    --exponent;
  }
  std::string mantissa = to_decimal(a, significant - 1);
  if (mantissa.rfind("10", 0) == 0) {  // rounding carried into a new digit
    a /= 10;
    ++exponent;
    mantissa = to_decimal(a, significant - 1);
  }
  std::string exp = std::to_string(exponent < 0 ? -exponent : exponent);
  if (exp.size() < 2) exp.insert(0, "0");
  return (negative ? "-" : "") + mantissa + "e" + (exponent < 0 ? "-" : "+") + exp;
}

}  // namespace bg
