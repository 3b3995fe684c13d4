#pragma once

// Nonsingular cubics y^2 = x^3 + ax + b with the chord-tangent group law.
//
// Three points of the curve are collinear exactly when they sum to the
// identity O (the point at infinity (0:1:0)); a tangent point counts twice.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "pierce/abelian.hpp"
#include "pierce/errors.hpp"
#include "pierce/field.hpp"
#include "pierce/plane.hpp"

namespace pierce {

template <ExactFieldElement F>
class WeierstrassCurve {
 public:
  WeierstrassCurve(F a, F b) : a_(std::move(a)), b_(std::move(b)) {
    require_same_field(a_, b_);
    auto ch = field_of(a_).characteristic();
    if (ch == 2 || ch == 3) throw Unsupported("short Weierstrass form needs characteristic other than 2 and 3");
    if (is_zero(discriminant_core())) throw DegenerateInput("singular cubic: 4a^3 + 27b^2 = 0");
  }

  const F& a() const { return a_; }
  const F& b() const { return b_; }
  FieldSpec field() const { return field_of(a_); }

  /// 4a^3 + 27b^2; nonzero for every constructed curve.
  F discriminant_core() const {
    return constant_like(a_, 4) * a_ * a_ * a_ + constant_like(a_, 27) * b_ * b_;
  }

  bool contains(const F& x, const F& y) const {
    if (field_of(x) != field() || field_of(y) != field()) return false;
    return y * y == x * x * x + a_ * x + b_;
  }

  F constant(std::int64_t v) const { return constant_like(a_, v); }

  friend bool operator==(const WeierstrassCurve& l, const WeierstrassCurve& r) {
    return l.field() == r.field() && l.a_ == r.a_ && l.b_ == r.b_;
  }

 private:
  F a_, b_;
};

/// Point of a Weierstrass curve: the identity O or an affine (x, y).
template <ExactFieldElement F>
class ECPoint {
 public:
  ECPoint() = default;
  static ECPoint identity() { return {}; }
  static ECPoint affine(F x, F y) {
    ECPoint p;
    p.xy_.emplace(std::move(x), std::move(y));
    return p;
  }

  bool is_identity() const { return !xy_.has_value(); }
  const F& x() const { return coords().first; }
  const F& y() const { return coords().second; }

  friend bool operator==(const ECPoint& a, const ECPoint& b) { return a.xy_ == b.xy_; }
  friend bool operator!=(const ECPoint& a, const ECPoint& b) { return !(a == b); }
  friend bool operator<(const ECPoint& a, const ECPoint& b) {
    if (!a.xy_ || !b.xy_) return !a.xy_ && b.xy_;
    return *a.xy_ < *b.xy_;
  }
  friend bool operator>(const ECPoint& a, const ECPoint& b) { return b < a; }
  friend bool operator<=(const ECPoint& a, const ECPoint& b) { return !(b < a); }
  friend bool operator>=(const ECPoint& a, const ECPoint& b) { return !(a < b); }

 private:
  const std::pair<F, F>& coords() const {
    if (!xy_) throw DegenerateInput("the identity O has no affine coordinates");
    return *xy_;
  }
  std::optional<std::pair<F, F>> xy_;
};

template <ExactFieldElement F>
bool on_curve(const WeierstrassCurve<F>& c, const ECPoint<F>& p) {
  return p.is_identity() || c.contains(p.x(), p.y());
}

template <ExactFieldElement F>
void require_on_curve(const WeierstrassCurve<F>& c, const ECPoint<F>& p) {
  if (!on_curve(c, p)) throw UsageError("point is not on the curve");
}

template <ExactFieldElement F>
ECPoint<F> negate(const WeierstrassCurve<F>& c, const ECPoint<F>& p) {
  require_on_curve(c, p);
  if (p.is_identity()) return p;
  return ECPoint<F>::affine(p.x(), -p.y());
}

/// Chord-tangent sum.
template <ExactFieldElement F>
ECPoint<F> add(const WeierstrassCurve<F>& c, const ECPoint<F>& p, const ECPoint<F>& q) {
  require_on_curve(c, p);
  require_on_curve(c, q);
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  F lambda = c.constant(0);
  if (p.x() == q.x()) {
    if (is_zero(p.y() + q.y())) return ECPoint<F>::identity();  // vertical chord or vertical tangent
    lambda = (c.constant(3) * p.x() * p.x() + c.a()) / (c.constant(2) * p.y());
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  F x3 = lambda * lambda - p.x() - q.x();
  F y3 = lambda * (p.x() - x3) - p.y();
  return ECPoint<F>::affine(std::move(x3), std::move(y3));
}

/// The unique r with p + q + r = O: the third point of the curve on line pq
/// (on the tangent when p = q).
template <ExactFieldElement F>
ECPoint<F> chord_third(const WeierstrassCurve<F>& c, const ECPoint<F>& p, const ECPoint<F>& q) {
  return negate(c, add(c, p, q));
}

template <ExactFieldElement F>
ECPoint<F> tangent_third(const WeierstrassCurve<F>& c, const ECPoint<F>& p) {
  return chord_third(c, p, p);
}

template <ExactFieldElement F>
ECPoint<F> multiply(const WeierstrassCurve<F>& c, std::int64_t k, const ECPoint<F>& p) {
  ECPoint<F> base = k < 0 ? negate(c, p) : p;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  ECPoint<F> acc;
  while (n) {
    if (n & 1) acc = add(c, acc, base);
    base = add(c, base, base);
    n >>= 1;
  }
  return acc;
}

/// O maps to (0:1:0), the curve's single point at infinity.
template <ExactFieldElement F>
ProjPoint<F> to_projective(const WeierstrassCurve<F>& c, const ECPoint<F>& p) {
  if (p.is_identity()) return ProjPoint<F>(c.constant(0), c.constant(1), c.constant(0));
  return ProjPoint<F>(p.x(), p.y(), c.constant(1));
}

/// Tangent line at p: the gradient of Y^2 Z - X^3 - aXZ^2 - bZ^3.
template <ExactFieldElement F>
ProjLine<F> tangent_line(const WeierstrassCurve<F>& c, const ECPoint<F>& p) {
  require_on_curve(c, p);
  if (p.is_identity()) return ProjLine<F>(c.constant(0), c.constant(0), c.constant(1));
  const F& x = p.x();
  const F& y = p.y();
  return ProjLine<F>(-(c.constant(3) * x * x + c.a()), c.constant(2) * y,
                     y * y - c.constant(2) * c.a() * x - c.constant(3) * c.b());
}

/// The chord-tangent group of a curve, usable with the abelian-group algorithms.
template <ExactFieldElement F>
class CurveGroup {
 public:
  using Element = ECPoint<F>;

  explicit CurveGroup(WeierstrassCurve<F> curve) : curve_(std::move(curve)) {}

  const WeierstrassCurve<F>& curve() const { return curve_; }
  Element identity() const { return {}; }
  Element add(const Element& p, const Element& q) const { return pierce::add(curve_, p, q); }
  Element negate(const Element& p) const { return pierce::negate(curve_, p); }
  bool contains(const Element& p) const { return on_curve(curve_, p); }

  /// Over Q, closure stops once coordinates outgrow any plausible torsion point.
  bool exceeds_guard(const Element& p) const {
    if constexpr (std::is_same_v<F, Rational>) {
      return !p.is_identity() && (height_bits(p.x()) > 4096 || height_bits(p.y()) > 4096);
    } else {
      return false;
    }
  }

  friend bool operator==(const CurveGroup& a, const CurveGroup& b) { return a.curve_ == b.curve_; }

 private:
  WeierstrassCurve<F> curve_;
};

inline constexpr std::uint32_t kDefaultEnumerationBound = 1u << 14;

/// Every point of the curve over F_p, O first, then affine points by (x, y).
std::vector<ECPoint<ModP>> enumerate_points(const WeierstrassCurve<ModP>& c,
                                            std::uint32_t prime_bound = kDefaultEnumerationBound);

inline std::vector<ECPoint<Rational>> enumerate_points(const WeierstrassCurve<Rational>&,
                                                       std::uint32_t = kDefaultEnumerationBound) {
  throw Unsupported("point enumeration needs a prime field");
}

template <ExactFieldElement F>
struct ClosureResult {
  bool finite = false;
  std::vector<ECPoint<F>> points;  // sorted; empty when the cap was hit
};

/// Subgroup generated by `points`; over Q the closure is capped.
template <ExactFieldElement F>
ClosureResult<F> subgroup_generated(const WeierstrassCurve<F>& c, std::span<const ECPoint<F>> points,
                                    std::size_t cap = 10000) {
  for (const auto& p : points) require_on_curve(c, p);
  auto closure = subgroup_closure(CurveGroup<F>(c), points, cap);
  if (!closure) return {};
  return {true, std::move(*closure)};
}

/// Every subgroup of E(F_p), sorted by order then lexicographically. Curve groups
/// have rank at most two, so pairs of generators reach all of them.
std::vector<std::vector<ECPoint<ModP>>> all_subgroups(const WeierstrassCurve<ModP>& c);

/// Number of x in E(F_p) with x + x = target.
std::size_t doubling_solutions(const WeierstrassCurve<ModP>& c, const ECPoint<ModP>& target);

/// Number of points x of E(F_p) (O included) whose tangent line passes through a.
/// Bounded by 6: the polar conic of a meets the cubic at most six times.
std::size_t tangent_count_through(const ProjPoint<ModP>& a, const WeierstrassCurve<ModP>& c);

/// Maximum over a of the solutions to x + x = a, by enumeration.
std::size_t doubling_constant(const CurveGroup<ModP>& g);

/// 1 + number of rational roots of x^3 + ax + b, i.e. the rational 2-torsion.
std::size_t doubling_constant(const CurveGroup<Rational>& g);

}  // namespace pierce
