#include "pierce/conic_line.hpp"

namespace pierce {

std::string conic_kind_name(ConicKind k) {
  switch (k) {
    case ConicKind::ellipse: return "ellipse";
    case ConicKind::parabola: return "parabola";
    case ConicKind::hyperbola: return "hyperbola";
  }
  return "?";
}

ConicKind parse_conic_kind(std::string_view name) {
  if (name == "ellipse") return ConicKind::ellipse;
  if (name == "parabola") return ConicKind::parabola;
  if (name == "hyperbola") return ConicKind::hyperbola;
  throw UsageError("unknown conic kind '" + std::string(name) + "'");
}

HalfAngle::HalfAngle(Rational c, Rational s) : c_(std::move(c)), s_(std::move(s)) {
  if (!is_zero(c_)) {
    s_ /= c_;
    c_ = 1;
  } else if (!is_zero(s_)) {
    s_ = 1;
  } else {
    throw DegenerateInput("half-angle pair [0 : 0]");
  }
}

GTElement GTElement::hyperbola(Rational s) {
  if (is_zero(s)) throw DegenerateInput("hyperbola parameter must be nonzero");
  return GTElement(ConicKind::hyperbola, std::move(s));
}

const Rational& GTElement::value() const {
  if (kind_ == ConicKind::ellipse) throw UsageError("ellipse elements carry a half-angle, not a scalar");
  return std::get<Rational>(v_);
}

const HalfAngle& GTElement::half_angle() const {
  if (kind_ != ConicKind::ellipse) throw UsageError("only ellipse elements carry a half-angle");
  return std::get<HalfAngle>(v_);
}

namespace {

void require_same_kind(const GTElement& x, const GTElement& y) {
  if (x.kind() != y.kind()) {
    throw UsageError("elements of different conic groups: " + conic_kind_name(x.kind()) + " and " +
                     conic_kind_name(y.kind()));
  }
}

const Rational kZero = make_rational(0);
const Rational kOne = make_rational(1);

}  // namespace

GTElement gt_add(const GTElement& x, const GTElement& y) {
  require_same_kind(x, y);
  switch (x.kind()) {
    case ConicKind::parabola: return GTElement::parabola(x.value() + y.value());
    case ConicKind::hyperbola: return GTElement::hyperbola(x.value() * y.value());
    case ConicKind::ellipse: return GTElement::ellipse(x.half_angle() + y.half_angle());
  }
  throw UsageError("unknown conic kind");
}

GTElement gt_negate(const GTElement& x) {
  switch (x.kind()) {
    case ConicKind::parabola: return GTElement::parabola(-x.value());
    case ConicKind::hyperbola: return GTElement::hyperbola(kOne / x.value());
    case ConicKind::ellipse: return GTElement::ellipse(-x.half_angle());
  }
  throw UsageError("unknown conic kind");
}

bool gt_is_identity(const GTElement& x) {
  switch (x.kind()) {
    case ConicKind::parabola: return is_zero(x.value());
    case ConicKind::hyperbola: return x.value() == kOne;
    case ConicKind::ellipse: return x.half_angle().is_identity();
  }
  return false;
}

ProjPoint<Rational> phi_Q(const GTElement& t) {
  switch (t.kind()) {
    case ConicKind::parabola: return ProjPoint<Rational>::affine(t.value(), t.value() * t.value());
    case ConicKind::hyperbola: return ProjPoint<Rational>::affine(t.value(), kOne / t.value());
    case ConicKind::ellipse: {
      // angle 2πt: (cos^2 - sin^2 : 2 cos sin : cos^2 + sin^2) of πt
      const auto& h = t.half_angle();
      return ProjPoint<Rational>(h.c() * h.c() - h.s() * h.s(), 2 * h.c() * h.s(), h.c() * h.c() + h.s() * h.s());
    }
  }
  throw UsageError("unknown conic kind");
}

ProjPoint<Rational> phi_ell(const GTElement& z) {
  switch (z.kind()) {
    case ConicKind::parabola:
    case ConicKind::hyperbola: return ProjPoint<Rational>(kOne, -z.value(), kZero);
    case ConicKind::ellipse: {
      // direction angle π/2 - πz, i.e. vector (sin πz, cos πz)
      const auto& h = z.half_angle();
      return ProjPoint<Rational>(h.s(), h.c(), kZero);
    }
  }
  throw UsageError("unknown conic kind");
}

GTCollinearity gt_collinear_check(const GTElement& x, const GTElement& y, const GTElement& z) {
  require_same_kind(x, y);
  require_same_kind(y, z);
  if (x == y) throw UsageError("gt_collinear_check needs two distinct conic points");
  GTCollinearity r;
  switch (x.kind()) {
    case ConicKind::parabola: r.group_zero = is_zero(x.value() + y.value() + z.value()); break;
    case ConicKind::hyperbola: r.group_zero = x.value() * y.value() * z.value() == kOne; break;
    case ConicKind::ellipse: r.group_zero = (x.half_angle() + y.half_angle() + z.half_angle()).is_identity(); break;
  }
  r.geometric_collinear = collinear(phi_Q(x), phi_Q(y), phi_ell(z));
  return r;
}

std::optional<std::size_t> finite_subgroup_obstruction(ConicKind k) {
  if (k == ConicKind::ellipse) return std::nullopt;
  return 2;
}

ChordClass direction_class_of_chord(const AngleElem& a, const AngleElem& b) {
  return {a + b, a == b};
}

bool on_conic(const ProjPoint<Rational>& p, ConicKind k) {
  const auto& X = p.X();
  const auto& Y = p.Y();
  const auto& Z = p.Z();
  switch (k) {
    case ConicKind::ellipse: return X * X + Y * Y == Z * Z;
    case ConicKind::parabola: return Y * Z == X * X;
    case ConicKind::hyperbola: return X * Y == Z * Z;
  }
  return false;
}

GTElement pull_back_conic(const ProjPoint<Rational>& p, ConicKind k) {
  if (!on_conic(p, k)) throw DegenerateInput("point is not on the " + conic_kind_name(k));
  if (p.at_infinity()) throw DegenerateInput("points of the conic at infinity lie on ℓ, not in phi_Q's image");
  auto [x, y] = p.affine_coords();
  switch (k) {
    case ConicKind::parabola: return GTElement::parabola(x);
    case ConicKind::hyperbola: return GTElement::hyperbola(x);
    case ConicKind::ellipse:
      // tan(α/2) = sin α / (1 + cos α)
      if (is_zero(x + kOne)) return GTElement::ellipse(HalfAngle::infinity());
      return GTElement::ellipse(HalfAngle(x + kOne, y));
  }
  throw UsageError("unknown conic kind");
}

GTElement pull_back_line(const ProjPoint<Rational>& p, ConicKind k) {
  if (!p.at_infinity()) throw DegenerateInput("point is not on the line at infinity");
  switch (k) {
    case ConicKind::parabola:
    case ConicKind::hyperbola:
      if (is_zero(p.X())) throw DegenerateInput("vertical direction is not in phi_ell's image");
      if (k == ConicKind::hyperbola && is_zero(p.Y())) {
        throw DegenerateInput("horizontal direction is not in phi_ell's image");
      }
      return k == ConicKind::parabola ? GTElement::parabola(-p.Y() / p.X()) : GTElement::hyperbola(-p.Y() / p.X());
    case ConicKind::ellipse: return GTElement::ellipse(HalfAngle(p.Y(), p.X()));
  }
  throw UsageError("unknown conic kind");
}

}  // namespace pierce
