#include "pierce/modp.hpp"

namespace pierce {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw DegenerateInput("division by zero in F_" + std::to_string(p_));
  // extended Euclid on (v, p)
  std::int64_t r0 = p_, r1 = v_, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return ModP(p_, t0);
}

}  // namespace pierce
