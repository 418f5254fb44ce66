#include "entlab/rational.hpp"

#include "entlab/errors.hpp"

#include <cctype>
#include <cstdio>

namespace entlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view original) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw ParseError("not a number: '" + std::string(original) + "'");
  BigInt v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError("not a number: '" + std::string(original) + "'");
    v = v * 10 + (c - '0');
  }
  return negative ? -v : v;
}

BigInt pow10(unsigned long exp) {
  BigInt v = 1;
  for (unsigned long i = 0; i < exp; ++i) v *= 10;
  return v;
}

Rational parse_decimal(std::string_view s, std::string_view original) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  std::string digits;
  long frac_len = 0;
  long exponent = 0;
  std::size_t pos = 0;

  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') digits.push_back(s[pos++]);
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      digits.push_back(s[pos++]);
      ++frac_len;
    }
  }
  if (digits.empty()) throw ParseError("not a number: '" + std::string(original) + "'");
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    std::string_view tail = s.substr(pos + 1);
    BigInt e = parse_integer(tail, original);
    if (e > 9999 || e < -9999) throw ParseError("exponent out of range: '" + std::string(original) + "'");
    exponent = e.convert_to<long>();
    pos = s.size();
  }
  if (pos != s.size()) throw ParseError("not a number: '" + std::string(original) + "'");

  BigInt mantissa = 0;
  for (char c : digits) mantissa = mantissa * 10 + (c - '0');
  if (negative) mantissa = -mantissa;

  long scale = exponent - frac_len;
  if (scale >= 0) return Rational(mantissa * pow10(static_cast<unsigned long>(scale)));
  return make_rational(mantissa, pow10(static_cast<unsigned long>(-scale)));
}

}  // namespace

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw ParseError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);  // canonicalizes
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty value");
  std::size_t slash = s.find('/');
  if (slash != std::string_view::npos) {
    BigInt num = parse_integer(trim(s.substr(0, slash)), text);
    BigInt den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return make_rational(std::move(num), std::move(den));
  }
  return parse_decimal(s, text);
}

std::string to_fraction_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_decimal_string(const Rational& value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", to_double(value));
  return buf;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace entlab
