#include "pierce/field.hpp"

#include "pierce/errors.hpp"

namespace pierce {

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  FieldSpec f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

std::string FieldSpec::to_string() const {
  return kind == Kind::rational ? "rational" : "fp:" + std::to_string(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "rational") return rational();
  if (text.substr(0, 3) == "fp:") {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 9) {
      throw UsageError("malformed field '" + std::string(text) + "'");
    }
    return prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw UsageError("unknown field '" + std::string(text) + "'");
}

std::string element_to_string(const Rational& x) { return to_string(x); }
std::string element_to_string(const ModP& x) { return std::to_string(x.value()); }

Rational parse_rational_element(std::string_view text) { return parse_rational(text); }

ModP parse_modp_element(std::string_view text, std::uint32_t p) {
  Rational r = parse_rational(text);
  ModP num(p, static_cast<std::int64_t>(numerator_of(r) % p));
  ModP den(p, static_cast<std::int64_t>(denominator_of(r) % p));
  if (is_zero(den)) throw UsageError("denominator vanishes mod " + std::to_string(p));
  return num / den;
}

}  // namespace pierce
