#include "pierce/rational.hpp"

#include <cctype>

#include "pierce/errors.hpp"

namespace pierce {

BigInt floor_of(const Rational& x) {
  const BigInt& n = numerator_of(x);
  const BigInt& d = denominator_of(x);
  BigInt q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Rational frac_part(const Rational& x) { return x - Rational(floor_of(x)); }

std::string to_string(const Rational& x) {
  return numerator_of(x).str() + "/" + denominator_of(x).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole, bool allow_sign = true) {
  std::size_t i = 0;
  bool negative = false;
  if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw UsageError("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw UsageError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  // a leading 0 would select octal in the BigInt string constructor
  while (i + 1 < text.size() && text[i] == '0') ++i;
  BigInt value(std::string(text.substr(i)));
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text, false);
  if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::size_t height_bits(const Rational& x) {
  BigInt n = abs(numerator_of(x));
  const BigInt& d = denominator_of(x);
  std::size_t bn = n == 0 ? 0 : msb(n) + 1;
  std::size_t bd = msb(d) + 1;
  return bn > bd ? bn : bd;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace pierce
