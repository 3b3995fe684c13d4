#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "pierce/errors.hpp"

namespace pierce {

bool is_prime(std::uint64_t n);

/// Residue modulo a prime. The modulus travels with the value so that
/// mixing elements of different prime fields is caught at run time.
class ModP {
 public:
  ModP(std::uint32_t modulus, std::int64_t value)
      : p_(modulus), v_(reduce(value, modulus)) {}

  std::uint32_t modulus() const { return p_; }
  std::uint32_t value() const { return v_; }

  ModP operator+(const ModP& o) const {
    check(o);
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    return raw(p_, static_cast<std::uint32_t>(s >= p_ ? s - p_ : s));
  }
  ModP operator-(const ModP& o) const {
    check(o);
    return raw(p_, v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_));
  }
  ModP operator-() const { return raw(p_, v_ == 0 ? 0 : p_ - v_); }
  ModP operator*(const ModP& o) const {
    check(o);
    return raw(p_, static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % p_));
  }
  ModP operator/(const ModP& o) const { return *this * o.inverse(); }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  ModP& operator/=(const ModP& o) { return *this = *this / o; }

  ModP inverse() const;

  friend bool operator==(const ModP& a, const ModP& b) {
    a.check(b);
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const ModP& a, const ModP& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    return a.v_ <=> b.v_;
  }

 private:
  static std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
    if (p < 2) throw UsageError("modulus must be at least 2");
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
  }
  static ModP raw(std::uint32_t p, std::uint32_t v) {
    ModP m(p, 0);
    m.v_ = v;
    return m;
  }
  void check(const ModP& o) const {
    if (p_ != o.p_) {
      throw UsageError("mixed prime fields: F_" + std::to_string(p_) + " and F_" +
                       std::to_string(o.p_));
    }
  }

  std::uint32_t p_;
  std::uint32_t v_;
};

inline bool is_zero(const ModP& x) { return x.value() == 0; }

}  // namespace pierce
