#pragma once

// Reducible cubics Q ∪ ℓ with Q a canonical conic and ℓ the line at infinity.
//
// Each conic kind carries a group F with maps phi_Q : F -> Q and
// phi_ell : F -> ℓ such that x + y + z = 0 exactly when phi_Q(x), phi_Q(y) and
// phi_ell(z) are collinear. Conventions used here:
//
//   parabola  y = x^2    F = (Q, +)    phi_Q(t) = (t, t^2)      phi_ell(z) = (1 : -z : 0)
//   hyperbola xy = 1     F = (Q*, ·)   phi_Q(s) = (s, 1/s)      phi_ell(z) = (1 : -z : 0)
//   ellipse   x^2+y^2=1  F = R/Z       phi_Q(t) = angle 2πt     phi_ell(z) = direction of angle π/2 - πz
//
// On the circle the chord through the points with parameters a and b has
// direction angle π(a+b) + π/2, so its direction class is a + b mod 1.
// Exact rational work on the circle uses HalfAngle, the point [cos πt : sin πt]
// of P^1(Q); adding parameters is complex multiplication of these pairs.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pierce/abelian.hpp"
#include "pierce/plane.hpp"
#include "pierce/rational.hpp"

namespace pierce {

enum class ConicKind { ellipse, parabola, hyperbola };

std::string conic_kind_name(ConicKind k);
ConicKind parse_conic_kind(std::string_view name);

/// [c : s] = [cos πt : sin πt] for a circle parameter t; tan(πt) = s / c.
class HalfAngle {
 public:
  HalfAngle() : c_(1), s_(0) {}
  HalfAngle(Rational c, Rational s);
  static HalfAngle from_tan(const Rational& u) { return HalfAngle(make_rational(1), u); }
  /// t = 1/2, the antipode of the identity.
  static HalfAngle infinity() { return HalfAngle(make_rational(0), make_rational(1)); }

  const Rational& c() const { return c_; }
  const Rational& s() const { return s_; }
  bool is_identity() const { return is_zero(s_); }

  HalfAngle operator+(const HalfAngle& o) const {
    return HalfAngle(c_ * o.c_ - s_ * o.s_, c_ * o.s_ + s_ * o.c_);
  }
  HalfAngle operator-() const { return HalfAngle(c_, -s_); }

  friend bool operator==(const HalfAngle& a, const HalfAngle& b) { return a.c_ == b.c_ && a.s_ == b.s_; }
  friend bool operator!=(const HalfAngle& a, const HalfAngle& b) { return !(a == b); }
  friend bool operator<(const HalfAngle& a, const HalfAngle& b) {
    return a.c_ != b.c_ ? a.c_ < b.c_ : a.s_ < b.s_;
  }
  friend bool operator>(const HalfAngle& a, const HalfAngle& b) { return b < a; }
  friend bool operator<=(const HalfAngle& a, const HalfAngle& b) { return !(b < a); }
  friend bool operator>=(const HalfAngle& a, const HalfAngle& b) { return !(a < b); }

 private:
  Rational c_, s_;
};

/// Rational points of the unit circle under angle addition.
struct CircleGroup {
  using Element = HalfAngle;
  Element identity() const { return HalfAngle(make_rational(1), make_rational(0)); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element negate(const Element& a) const { return -a; }
  /// The only rational torsion has order dividing 4; anything else generates an infinite group.
  bool exceeds_guard(const Element& a) const { return !is_zero(a.c()) && !is_zero(a.s()) && a.s() != 1 && a.s() != -1; }
  friend bool operator==(const CircleGroup&, const CircleGroup&) = default;
};
inline std::size_t doubling_constant(const CircleGroup&) { return 2; }

/// (Q, +): the parabola's group.
struct AdditiveRationals {
  using Element = Rational;
  Element identity() const { return make_rational(0); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element negate(const Element& a) const { return -a; }
  bool exceeds_guard(const Element& a) const { return !is_zero(a); }
  friend bool operator==(const AdditiveRationals&, const AdditiveRationals&) = default;
};
inline std::size_t doubling_constant(const AdditiveRationals&) { return 1; }

/// (Q*, ·): the hyperbola's group, written additively. The sign is its Z/2Z factor.
struct MultiplicativeRationals {
  using Element = Rational;
  Element identity() const { return make_rational(1); }
  Element add(const Element& a, const Element& b) const { return a * b; }
  Element negate(const Element& a) const { return make_rational(1) / a; }
  bool contains(const Element& a) const { return !is_zero(a); }
  bool exceeds_guard(const Element& a) const { return a != 1 && a != -1; }
  friend bool operator==(const MultiplicativeRationals&, const MultiplicativeRationals&) = default;
};
inline std::size_t doubling_constant(const MultiplicativeRationals&) { return 2; }

/// Element of the group attached to one conic kind.
class GTElement {
 public:
  static GTElement parabola(Rational t) { return GTElement(ConicKind::parabola, std::move(t)); }
  static GTElement hyperbola(Rational s);
  static GTElement ellipse(HalfAngle h) { return GTElement(ConicKind::ellipse, std::move(h)); }
  static GTElement ellipse_tan(const Rational& u) { return ellipse(HalfAngle::from_tan(u)); }

  ConicKind kind() const { return kind_; }
  /// Parameter for parabola and hyperbola elements.
  const Rational& value() const;
  const HalfAngle& half_angle() const;

  friend bool operator==(const GTElement& a, const GTElement& b) { return a.kind_ == b.kind_ && a.v_ == b.v_; }

 private:
  GTElement(ConicKind k, std::variant<Rational, HalfAngle> v) : kind_(k), v_(std::move(v)) {}

  ConicKind kind_;
  std::variant<Rational, HalfAngle> v_;
};

GTElement gt_add(const GTElement& x, const GTElement& y);
GTElement gt_negate(const GTElement& x);
bool gt_is_identity(const GTElement& x);

/// Point of the canonical conic.
ProjPoint<Rational> phi_Q(const GTElement& t);

/// Point at infinity (a direction) on ℓ.
ProjPoint<Rational> phi_ell(const GTElement& z);

struct GTCollinearity {
  bool group_zero = false;
  bool geometric_collinear = false;
};

/// Both sides of the bridge, computed independently: the group law on one side,
/// a 3x3 determinant on the other. Requires x != y.
GTCollinearity gt_collinear_check(const GTElement& x, const GTElement& y, const GTElement& z);

/// Largest finite subgroup the conic's group admits; nullopt when unbounded (ellipse).
std::optional<std::size_t> finite_subgroup_obstruction(ConicKind k);

struct ChordClass {
  AngleElem cls;
  bool tangent = false;  // a == b: the class of the tangent at a
};

/// Direction class a + b of the chord between circle parameters a and b.
ChordClass direction_class_of_chord(const AngleElem& a, const AngleElem& b);

/// Does the point satisfy the homogeneous equation of the canonical conic?
bool on_conic(const ProjPoint<Rational>& p, ConicKind k);

/// Inverse of phi_Q on an affine point of the conic.
GTElement pull_back_conic(const ProjPoint<Rational>& p, ConicKind k);

/// Inverse of phi_ell on a point at infinity; throws DegenerateInput outside its image.
GTElement pull_back_line(const ProjPoint<Rational>& p, ConicKind k);

}  // namespace pierce
