#pragma once

#include <random>
#include <vector>

#include "pierce/plane.hpp"

namespace pierce::test {

inline Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

inline ProjPoint<Rational> pt(std::int64_t x, std::int64_t y) { return ProjPoint<Rational>::affine(q(x), q(y)); }

inline ProjPoint<Rational> pq(Rational x, Rational y) { return ProjPoint<Rational>::affine(std::move(x), std::move(y)); }

inline ProjPoint<Rational> inf(std::int64_t x, std::int64_t y) { return ProjPoint<Rational>(q(x), q(y), q(0)); }

inline ProjPoint<ModP> fp(std::uint32_t p, std::int64_t x, std::int64_t y, std::int64_t z = 1) {
  return ProjPoint<ModP>(ModP(p, x), ModP(p, y), ModP(p, z));
}

inline std::vector<ProjPoint<Rational>> unit_square() { return {pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)}; }

/// Fixed seeds keep property tests reproducible.
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed1234ULL + salt); }

}  // namespace pierce::test
