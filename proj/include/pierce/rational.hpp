#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pierce {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den < 0) return Rational(-BigInt(num), -BigInt(den));
  return Rational(BigInt(num), BigInt(den));
}

inline bool is_zero(const Rational& x) { return x == 0; }

inline BigInt numerator_of(const Rational& x) { return BigInt(boost::multiprecision::numerator(x)); }
inline BigInt denominator_of(const Rational& x) { return BigInt(boost::multiprecision::denominator(x)); }

/// Largest integer not exceeding x.
BigInt floor_of(const Rational& x);

/// Reduce into [0, 1).
Rational frac_part(const Rational& x);

/// Always "num/den" with a positive denominator, e.g. "-3/4", "5/1".
std::string to_string(const Rational& x);

/// Accepts "n", "n/d" with optional sign; throws UsageError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Bit length of the larger of |num| and den; used as a height guard.
std::size_t height_bits(const Rational& x);

double to_double(const Rational& x);

}  // namespace pierce
