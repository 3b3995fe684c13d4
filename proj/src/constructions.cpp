#include "pierce/constructions.hpp"

#include <algorithm>
#include <set>

namespace pierce {

namespace {

std::vector<AngleElem> sorted_unique(std::vector<AngleElem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<AngleElem> shifted(const std::vector<AngleElem>& pts, const AngleElem& by) {
  std::vector<AngleElem> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(p + by);
  return out;
}

std::vector<AngleElem> joined(std::vector<AngleElem> a, const std::vector<AngleElem>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

ProjPoint<Rational> rp(std::int64_t xn, std::int64_t xd, std::int64_t yn, std::int64_t yd = 1) {
  return ProjPoint<Rational>::affine(make_rational(xn, xd), make_rational(yn, yd));
}

ProjPoint<Rational> at_infinity(std::int64_t x, std::int64_t y) {
  return ProjPoint<Rational>(make_rational(x), make_rational(y), make_rational(0));
}

}  // namespace

const std::vector<AngleElem>& AngleConfig::operator[](Role r) const {
  static const std::vector<AngleElem> kEmpty;
  if (r == Role::R) return directions;
  auto it = roles.find(r);
  return it == roles.end() ? kEmpty : it->second;
}

void AngleConfig::validate() const {
  std::set<AngleElem> all;
  for (const auto& [role, pts] : roles) {
    if (role == Role::R) throw UsageError("directions belong in AngleConfig::directions");
    std::set<AngleElem> mine;
    for (const auto& p : pts) {
      if (!mine.insert(p).second) throw UsageError("repeated point in role " + role_name(role));
      if (!all.insert(p).second) throw UsageError("roles are not disjoint");
    }
  }
  if (roles.count(Role::P) && (roles.count(Role::B) || roles.count(Role::G))) {
    throw UsageError("a configuration is either unipartite (P) or bipartite (B, G)");
  }
  if (roles.count(Role::B) != roles.count(Role::G)) throw UsageError("bipartite configurations need both B and G");
  std::set<AngleElem> dirs;
  for (const auto& d : directions)
    if (!dirs.insert(d).second) throw UsageError("repeated direction in R");
}

std::vector<AngleElem> AngleConfig::missing_directions() const {
  std::set<AngleElem> dirs(directions.begin(), directions.end());
  auto census = bipartite() ? cross_chord_classes(roles.at(Role::B), roles.at(Role::G))
                            : (roles.count(Role::P) && roles.at(Role::P).size() >= 2 ? chord_classes(roles.at(Role::P))
                                                                                      : std::vector<AngleElem>{});
  std::vector<AngleElem> out;
  for (const auto& c : census)
    if (!dirs.count(c)) out.push_back(c);
  return out;
}

namespace {

AngleConfig checked(AngleConfig cfg) {
  cfg.validate();
  if (!cfg.missing_directions().empty()) throw std::logic_error("construction left a chord class unpierced");
  return cfg;
}

}  // namespace

std::vector<AngleElem> chord_classes(const std::vector<AngleElem>& pts) {
  if (pts.size() < 2) throw DegenerateInput("chord classes need at least two points");
  return restricted_sumset(GroupSet<AngleGroup>({}, pts)).elements();
}

std::vector<AngleElem> cross_chord_classes(const std::vector<AngleElem>& b, const std::vector<AngleElem>& g) {
  return sumset(GroupSet<AngleGroup>({}, b), GroupSet<AngleGroup>({}, g)).elements();
}

std::vector<AngleElem> regular_mgon(int m) {
  if (m < 3) throw UsageError("a regular m-gon needs m >= 3");
  std::vector<AngleElem> out;
  for (int j = 0; j < m; ++j) out.push_back(AngleElem::of(j, m));
  return out;
}

AngleConfig angle_config_from_points(std::vector<AngleElem> pts) {
  AngleConfig cfg;
  cfg.directions = chord_classes(pts);
  cfg.roles[Role::P] = sorted_unique(std::move(pts));
  return checked(std::move(cfg));
}

AngleConfig rotated_union(int m) {
  auto p1 = regular_mgon(m);
  auto p2 = shifted(p1, AngleElem::of(0, 1, 1));
  AngleConfig cfg;
  cfg.roles[Role::P] = joined(p1, p2);
  cfg.directions = sorted_unique(joined(joined(p1, p2), shifted(p1, AngleElem::of(0, 1, 2))));
  return checked(std::move(cfg));
}

AngleConfig bipartite_construction(int k) {
  if (k < 3 || k % 2 == 0) throw UsageError("the bipartite construction needs an odd k >= 3");
  const AngleElem half = AngleElem::of(1, 2);
  auto z = regular_mgon(k);
  auto zp = shifted(z, AngleElem::of(0, 1, 1));
  AngleConfig cfg;
  cfg.roles[Role::B] = joined(z, shifted(zp, half));   // Z ∪ -Z'
  cfg.roles[Role::G] = joined(shifted(z, half), zp);   // -Z ∪ Z'
  // classes: Z + (-Z) = {j/k + 1/2}; Z + Z' = (-Z') + (-Z) = {j/k + θ}; (-Z') + Z' = {j/k + 2θ + 1/2}
  cfg.directions = sorted_unique(joined(joined(shifted(z, half), zp), shifted(z, AngleElem::of(1, 2, 2))));
  return checked(std::move(cfg));
}

PointConfig<Rational> two_point() {
  return PointConfig<Rational>(FieldSpec::rational(), {{Role::P, {rp(0, 1, 0), rp(1, 1, 0)}}, {Role::R, {rp(2, 1, 0)}}});
}

PointConfig<Rational> complete_quadrilateral() {
  return PointConfig<Rational>(
      FieldSpec::rational(),
      {{Role::P, {rp(0, 1, 0), rp(1, 1, 0), rp(0, 1, 1), rp(1, 1, 1)}},
       {Role::R, {at_infinity(1, 0), at_infinity(0, 1), rp(1, 2, 1, 2)}}});
}

PointConfig<Rational> three_line_bipartite() {
  return PointConfig<Rational>(FieldSpec::rational(),
                               {{Role::B, {rp(0, 1, 0), rp(-1, 2, 1), rp(3, 1, 2)}},
                                {Role::G, {rp(7, 1, 0), rp(-4, 1, 1), rp(10, 1, 2)}},
                                {Role::R, {rp(-11, 1, 0), rp(5, 1, 1), rp(-8, 1, 2)}}});
}

std::vector<ProjPoint<Rational>> lattice_hexagon() {
  return {rp(1, 1, 0), rp(1, 1, 1), rp(0, 1, 1), rp(-1, 1, 0), rp(-1, 1, -1), rp(0, 1, -1)};
}

std::optional<ECPoint<ModP>> admissible_offset(const WeierstrassCurve<ModP>& c,
                                               const std::vector<ECPoint<ModP>>& subgroup) {
  std::set<ECPoint<ModP>> h(subgroup.begin(), subgroup.end());
  for (const auto& g : enumerate_points(c))
    if (!h.count(multiply(c, 3, g))) return g;
  return std::nullopt;
}

FpCosetInstance fp_coset_instance(const WeierstrassCurve<ModP>& c, const std::vector<ECPoint<ModP>>& subgroup,
                                  const ECPoint<ModP>& offset) {
  CurveGroup<ModP> grp(c);
  GroupSet<CurveGroup<ModP>> h(grp, subgroup);
  if (h.empty() || !h.contains(grp.identity())) throw UsageError("H must contain the identity");
  for (const auto& x : h)
    for (const auto& y : h)
      if (!h.contains(grp.add(x, y))) throw UsageError("H is not closed under addition");
  require_on_curve(c, offset);
  if (h.contains(multiply(c, 3, offset))) {
    throw DegenerateInput("3g lies in H: the coset g + H contains collinear triples");
  }
  FpCosetInstance inst;
  inst.subgroup = h.elements();
  inst.offset = offset;
  inst.P = translate(h, offset).elements();
  if (inst.P.size() >= 2) {
    GroupSet<CurveGroup<ModP>> p(grp, inst.P);
    inst.R = negated(restricted_sumset(p)).elements();
  }
  return inst;
}

}  // namespace pierce
