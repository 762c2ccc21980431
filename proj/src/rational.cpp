#include "favourlab/rational.hpp"

#include <cctype>
#include <cstdio>

#include "favourlab/error.hpp"

namespace favourlab {

namespace {

Integer parse_integer(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw SyntaxError("expected digits", offset + i);
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw SyntaxError(std::string("unexpected character '") + text[i] + "' in rational", offset + i);
    value = value * 10 + (text[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  offset = b;
  return s.substr(b, e - b);
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw InvalidInput("rational with zero denominator");
  value_ = denominator < 0 ? Value(-numerator, -denominator) : Value(numerator, denominator);
}

Rational Rational::parse(std::string_view raw) {
  std::size_t offset = 0;
  std::string_view text = trim(raw, offset);
  if (text.empty()) throw SyntaxError("empty rational", offset);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, offset), Integer(1));
  Integer num = parse_integer(text.substr(0, slash), offset);
  Integer den = parse_integer(text.substr(slash + 1), offset + slash + 1);
  if (den <= 0) throw SyntaxError("denominator must be positive", offset + slash + 1);
  return Rational(num, den);
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw InvalidInput("division by zero");
  return Rational(x.value_ / y.value_);
}

Integer Rational::ceil() const {
  Integer num = numerator();
  Integer den = denominator();
  Integer q = num / den;  // truncates toward zero
  if (q * den < num) ++q;
  return q;
}

std::string Rational::to_string() const {
  Integer den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

std::string Rational::to_decimal() const {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15g", to_double());
  return buffer;
}

}  // namespace favourlab
