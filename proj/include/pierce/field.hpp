#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "pierce/modp.hpp"
#include "pierce/rational.hpp"

namespace pierce {

/// Which exact field a value lives in: the rationals or F_p.
struct FieldSpec {
  enum class Kind { rational, prime };

  Kind kind = Kind::rational;
  std::uint32_t p = 0;

  static FieldSpec rational() { return {}; }
  static FieldSpec prime(std::uint32_t p);

  std::uint32_t characteristic() const { return kind == Kind::rational ? 0 : p; }

  /// "rational" or "fp:<p>".
  std::string to_string() const;
  static FieldSpec parse(std::string_view text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline FieldSpec field_of(const Rational&) { return FieldSpec::rational(); }
inline FieldSpec field_of(const ModP& x) { return FieldSpec::prime(x.modulus()); }

/// The integer v viewed in the same field as `like`.
inline Rational constant_like(const Rational&, std::int64_t v) { return make_rational(v); }
inline ModP constant_like(const ModP& like, std::int64_t v) { return ModP(like.modulus(), v); }

template <class F>
concept ExactFieldElement = std::copyable<F> && std::totally_ordered<F> &&
    requires(const F a, const F b, std::int64_t n) {
      { a + b } -> std::same_as<F>;
      { a - b } -> std::same_as<F>;
      { a * b } -> std::same_as<F>;
      { a / b } -> std::same_as<F>;
      { -a } -> std::same_as<F>;
      { is_zero(a) } -> std::convertible_to<bool>;
      { constant_like(a, n) } -> std::same_as<F>;
      { field_of(a) } -> std::same_as<FieldSpec>;
    };

template <ExactFieldElement F>
bool same_field(const F& a, const F& b) {
  return field_of(a) == field_of(b);
}

std::string element_to_string(const Rational& x);
std::string element_to_string(const ModP& x);

/// Parse an element of `field`; rationals as "n/d", residues as decimal integers (any sign).
Rational parse_rational_element(std::string_view text);
ModP parse_modp_element(std::string_view text, std::uint32_t p);

}  // namespace pierce
