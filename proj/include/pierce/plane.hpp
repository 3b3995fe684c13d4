#pragma once

// Exact projective incidence geometry over Q or F_p.
//
// Points and lines are homogeneous triples kept in canonical form: the first
// nonzero coordinate is scaled to 1. Two triples describe the same point (line)
// exactly when they compare equal, so std::set deduplicates them directly.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pierce/errors.hpp"
#include "pierce/field.hpp"

namespace pierce {

enum class Role { P, B, G, R };

std::string role_name(Role r);
Role parse_role(std::string_view name);

namespace detail {

template <ExactFieldElement F>
std::array<F, 3> normalize_triple(std::array<F, 3> v, const char* what) {
  if (!same_field(v[0], v[1]) || !same_field(v[1], v[2])) {
    throw UsageError(std::string(what) + " coordinates from different fields");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (!is_zero(v[i])) {
      F lead = v[i];
      for (auto& c : v) c = c / lead;
      return v;
    }
  }
  throw DegenerateInput(std::string(what) + " with all coordinates zero");
}

template <ExactFieldElement F>
std::array<F, 3> cross(const std::array<F, 3>& u, const std::array<F, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

template <ExactFieldElement F>
F dot(const std::array<F, 3>& u, const std::array<F, 3>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

}  // namespace detail

/// Point (X:Y:Z) of the projective plane. Z = 0 means "at infinity".
template <ExactFieldElement F>
class ProjPoint {
 public:
  ProjPoint(F x, F y, F z) : c_(detail::normalize_triple<F>({std::move(x), std::move(y), std::move(z)}, "point")) {}

  static ProjPoint affine(F x, F y) {
    F one = constant_like(x, 1);
    return ProjPoint(std::move(x), std::move(y), std::move(one));
  }

  const F& X() const { return c_[0]; }
  const F& Y() const { return c_[1]; }
  const F& Z() const { return c_[2]; }
  const std::array<F, 3>& coords() const { return c_; }

  bool at_infinity() const { return is_zero(c_[2]); }
  FieldSpec field() const { return field_of(c_[0]); }

  /// Affine coordinates; throws DegenerateInput for points at infinity.
  std::pair<F, F> affine_coords() const {
    if (at_infinity()) throw DegenerateInput("point at infinity has no affine coordinates");
    return {c_[0] / c_[2], c_[1] / c_[2]};
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.c_ < b.c_; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  friend bool operator>(const ProjPoint& a, const ProjPoint& b) { return b < a; }
  friend bool operator<=(const ProjPoint& a, const ProjPoint& b) { return !(b < a); }
  friend bool operator>=(const ProjPoint& a, const ProjPoint& b) { return !(a < b); }

 private:
  std::array<F, 3> c_;
};

/// Line aX + bY + cZ = 0.
template <ExactFieldElement F>
class ProjLine {
 public:
  ProjLine(F a, F b, F c) : c_(detail::normalize_triple<F>({std::move(a), std::move(b), std::move(c)}, "line")) {}

  const F& a() const { return c_[0]; }
  const F& b() const { return c_[1]; }
  const F& c() const { return c_[2]; }
  const std::array<F, 3>& coords() const { return c_; }

  bool is_line_at_infinity() const { return is_zero(c_[0]) && is_zero(c_[1]); }

  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.c_ == b.c_; }
  friend bool operator<(const ProjLine& a, const ProjLine& b) { return a.c_ < b.c_; }
  friend bool operator!=(const ProjLine& a, const ProjLine& b) { return !(a == b); }

 private:
  std::array<F, 3> c_;
};

template <ExactFieldElement F>
ProjPoint<F> point(std::int64_t x, std::int64_t y, const F& like) {
  return ProjPoint<F>::affine(constant_like(like, x), constant_like(like, y));
}

template <ExactFieldElement F>
void require_same_field(const F& a, const F& b) {
  if (!same_field(a, b)) {
    throw UsageError("arguments from different fields: " + field_of(a).to_string() + " vs " +
                     field_of(b).to_string());
  }
}

template <ExactFieldElement F>
F determinant(const ProjPoint<F>& p, const ProjPoint<F>& q, const ProjPoint<F>& r) {
  require_same_field(p.X(), q.X());
  require_same_field(q.X(), r.X());
  return detail::dot(p.coords(), detail::cross(q.coords(), r.coords()));
}

template <ExactFieldElement F>
bool collinear(const ProjPoint<F>& p, const ProjPoint<F>& q, const ProjPoint<F>& r) {
  return is_zero(determinant(p, q, r));
}

template <ExactFieldElement F>
bool incident(const ProjPoint<F>& p, const ProjLine<F>& l) {
  require_same_field(p.X(), l.a());
  return is_zero(detail::dot(p.coords(), l.coords()));
}

template <ExactFieldElement F>
ProjLine<F> line_through(const ProjPoint<F>& p, const ProjPoint<F>& q) {
  require_same_field(p.X(), q.X());
  if (p == q) throw DegenerateInput("line_through: the two points coincide");
  auto c = detail::cross(p.coords(), q.coords());
  return ProjLine<F>(c[0], c[1], c[2]);
}

/// Intersection of two distinct lines.
template <ExactFieldElement F>
ProjPoint<F> meet(const ProjLine<F>& l, const ProjLine<F>& m) {
  require_same_field(l.a(), m.a());
  if (l == m) throw DegenerateInput("meet: the two lines coincide");
  auto c = detail::cross(l.coords(), m.coords());
  return ProjPoint<F>(c[0], c[1], c[2]);
}

/// The point at infinity of l, i.e. its direction.
template <ExactFieldElement F>
ProjPoint<F> direction_of(const ProjLine<F>& l) {
  if (l.is_line_at_infinity()) throw DegenerateInput("the line at infinity has no direction");
  return ProjPoint<F>(l.b(), -l.a(), constant_like(l.a(), 0));
}

template <ExactFieldElement F>
void require_distinct(std::span<const ProjPoint<F>> s, const char* what) {
  std::set<ProjPoint<F>> seen;
  for (const auto& p : s) {
    if (!seen.insert(p).second) throw UsageError(std::string(what) + ": repeated point");
  }
}

/// First collinear triple of distinct points, if any.
template <ExactFieldElement F>
std::optional<std::array<std::size_t, 3>> find_collinear_triple(std::span<const ProjPoint<F>> s) {
  require_distinct(s, "general position test");
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (std::size_t k = j + 1; k < s.size(); ++k)
        if (collinear(s[i], s[j], s[k])) return std::array<std::size_t, 3>{i, j, k};
  return std::nullopt;
}

template <ExactFieldElement F>
bool is_general_position(std::span<const ProjPoint<F>> s) {
  return !find_collinear_triple(s).has_value();
}

template <ExactFieldElement F>
std::set<ProjLine<F>> determined_lines(std::span<const ProjPoint<F>> s) {
  if (s.size() < 2) throw UsageError("determined_lines needs at least two points");
  require_distinct(s, "determined_lines");
  std::set<ProjLine<F>> lines;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) lines.insert(line_through(s[i], s[j]));
  return lines;
}

template <ExactFieldElement F>
struct PiercingVerdict {
  bool pierced = true;
  /// One unpierced pair when pierced is false.
  std::optional<std::pair<ProjPoint<F>, ProjPoint<F>>> witness;
};

namespace detail {

template <ExactFieldElement F>
void require_disjoint(std::span<const ProjPoint<F>> a, std::span<const ProjPoint<F>> b,
                      const char* what) {
  std::set<ProjPoint<F>> sa(a.begin(), a.end());
  for (const auto& q : b) {
    if (sa.count(q)) throw UsageError(std::string(what) + ": sets are not disjoint");
  }
}

template <ExactFieldElement F>
bool pierced_by(const ProjPoint<F>& x, const ProjPoint<F>& y, std::span<const ProjPoint<F>> r) {
  for (const auto& q : r)
    if (collinear(x, y, q)) return true;
  return false;
}

}  // namespace detail

/// Does every line through two points of P contain a point of R?
template <ExactFieldElement F>
PiercingVerdict<F> check_piercing(std::span<const ProjPoint<F>> P, std::span<const ProjPoint<F>> R) {
  require_distinct(P, "check_piercing P");
  require_distinct(R, "check_piercing R");
  detail::require_disjoint(P, R, "check_piercing");
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j)
      if (!detail::pierced_by(P[i], P[j], R)) return {false, std::make_pair(P[i], P[j])};
  return {};
}

/// Does every line through a point of B and a point of G contain a point of R?
template <ExactFieldElement F>
PiercingVerdict<F> check_piercing_bipartite(std::span<const ProjPoint<F>> B,
                                            std::span<const ProjPoint<F>> G,
                                            std::span<const ProjPoint<F>> R) {
  require_distinct(B, "check_piercing_bipartite B");
  require_distinct(G, "check_piercing_bipartite G");
  require_distinct(R, "check_piercing_bipartite R");
  detail::require_disjoint(B, G, "check_piercing_bipartite");
  detail::require_disjoint(B, R, "check_piercing_bipartite");
  detail::require_disjoint(G, R, "check_piercing_bipartite");
  for (const auto& b : B)
    for (const auto& g : G)
      if (!detail::pierced_by(b, g, R)) return {false, std::make_pair(b, g)};
  return {};
}

/// Points of the plane grouped by role (P, B, G, R) over one field.
template <ExactFieldElement F>
class PointConfig {
 public:
  PointConfig(FieldSpec field, std::map<Role, std::vector<ProjPoint<F>>> roles)
      : field_(field), roles_(std::move(roles)) {
    validate();
  }

  const FieldSpec& field() const { return field_; }
  const std::map<Role, std::vector<ProjPoint<F>>>& roles() const { return roles_; }

  bool has(Role r) const { return roles_.count(r) != 0; }
  std::span<const ProjPoint<F>> operator[](Role r) const {
    auto it = roles_.find(r);
    if (it == roles_.end()) return {};
    return it->second;
  }

  friend bool operator==(const PointConfig& a, const PointConfig& b) {
    return a.field_ == b.field_ && a.roles_ == b.roles_;
  }

 private:
  void validate() const {
    std::set<ProjPoint<F>> all;
    for (const auto& [role, pts] : roles_) {
      std::set<ProjPoint<F>> mine;
      for (const auto& p : pts) {
        if (p.field() != field_) throw UsageError("point outside the configuration's field");
        if (!mine.insert(p).second) throw UsageError("repeated point in role " + role_name(role));
        if (!all.insert(p).second) throw UsageError("roles are not disjoint");
      }
    }
  }

  FieldSpec field_;
  std::map<Role, std::vector<ProjPoint<F>>> roles_;
};

}  // namespace pierce
