#include "pierce/cubic.hpp"

#include <cmath>

namespace pierce {

std::vector<ECPoint<ModP>> enumerate_points(const WeierstrassCurve<ModP>& c, std::uint32_t prime_bound) {
  const std::uint32_t p = c.field().p;
  if (p > prime_bound) {
    throw Unsupported("enumeration over F_" + std::to_string(p) + " exceeds the bound " +
                      std::to_string(prime_bound));
  }
  std::vector<std::vector<std::uint32_t>> roots(p);
  for (std::uint32_t y = 0; y < p; ++y) roots[(std::uint64_t{y} * y) % p].push_back(y);

  std::vector<ECPoint<ModP>> out{ECPoint<ModP>::identity()};
  for (std::uint32_t x = 0; x < p; ++x) {
    ModP X(p, x);
    ModP rhs = X * X * X + c.a() * X + c.b();
    for (auto y : roots[rhs.value()]) out.push_back(ECPoint<ModP>::affine(X, ModP(p, y)));
  }
  return out;
}

std::vector<std::vector<ECPoint<ModP>>> all_subgroups(const WeierstrassCurve<ModP>& c) {
  auto pts = enumerate_points(c);
  std::set<std::vector<ECPoint<ModP>>> found;
  CurveGroup<ModP> g(c);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i; j < pts.size(); ++j) {
      std::vector<ECPoint<ModP>> gens{pts[i], pts[j]};
      auto h = subgroup_closure(g, std::span<const ECPoint<ModP>>(gens), pts.size());
      if (h) found.insert(std::move(*h));
    }
  }
  std::vector<std::vector<ECPoint<ModP>>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::size_t doubling_solutions(const WeierstrassCurve<ModP>& c, const ECPoint<ModP>& target) {
  std::size_t n = 0;
  for (const auto& x : enumerate_points(c))
    if (add(c, x, x) == target) ++n;
  return n;
}

std::size_t tangent_count_through(const ProjPoint<ModP>& a, const WeierstrassCurve<ModP>& c) {
  require_same_field(a.X(), c.a());
  std::size_t n = 0;
  for (const auto& x : enumerate_points(c))
    if (incident(a, tangent_line(c, x))) ++n;
  return n;
}

std::size_t doubling_constant(const CurveGroup<ModP>& g) {
  std::map<ECPoint<ModP>, std::size_t> tally;
  for (const auto& x : enumerate_points(g.curve())) ++tally[g.add(x, x)];
  std::size_t best = 0;
  for (const auto& [target, count] : tally) best = std::max(best, count);
  return best;
}

namespace {

// Integer roots of X^3 + A X + B. Real roots are bracketed around the critical
// points, refined in long double, and confirmed exactly on nearby integers.
std::vector<BigInt> integer_roots_depressed_cubic(const BigInt& A, const BigInt& B) {
  auto eval = [&](const BigInt& x) { return BigInt(x * x * x + A * x + B); };
  std::set<BigInt> roots;
  if (B == 0) {
    roots.insert(BigInt(0));
    if (A < 0) {
      BigInt s = sqrt(BigInt(-A));
      if (s * s == -A) {
        roots.insert(s);
        roots.insert(BigInt(-s));
      }
    }
    return {roots.begin(), roots.end()};
  }
  long double a = A.convert_to<long double>();
  long double b = B.convert_to<long double>();
  auto f = [&](long double x) { return x * x * x + a * x + b; };
  long double bound = 1 + std::max(std::fabs(a), std::fabs(b));
  std::vector<long double> knots{-bound};
  if (a < 0) {
    long double cp = std::sqrt(-a / 3);
    knots.push_back(-cp);
    knots.push_back(cp);
  }
  knots.push_back(bound);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    long double lo = knots[i], hi = knots[i + 1];
    long double flo = f(lo), fhi = f(hi);
    std::vector<long double> guesses{lo, hi};
    if ((flo <= 0 && fhi >= 0) || (flo >= 0 && fhi <= 0)) {
      for (int it = 0; it < 400; ++it) {
        long double mid = (lo + hi) / 2;
        long double fm = f(mid);
        if ((fm <= 0) == (flo <= 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      guesses.push_back(lo);
    }
    for (long double g : guesses) {
      BigInt center(static_cast<long long>(std::llround(g)));
      for (int d = -2; d <= 2; ++d) {
        BigInt cand = center + d;
        if (eval(cand) == 0) roots.insert(cand);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace

std::size_t doubling_constant(const CurveGroup<Rational>& g) {
  const auto& a = g.curve().a();
  const auto& b = g.curve().b();
  BigInt d = boost::multiprecision::lcm(denominator_of(a), denominator_of(b));
  // x = X/d turns the cubic into a monic integer one.
  Rational A = a * Rational(d * d);
  Rational B = b * Rational(d * d * d);
  return 1 + integer_roots_depressed_cubic(numerator_of(A), numerator_of(B)).size();
}

}  // namespace pierce
