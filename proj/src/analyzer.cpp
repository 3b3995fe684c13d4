#include "pierce/analyzer.hpp"

namespace pierce {

DirectionCensus direction_census(const std::vector<AngleElem>& s) {
  if (s.size() < 2) throw DegenerateInput("direction census needs at least two points");
  DirectionCensus out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) throw UsageError("repeated point in direction census");
      ++out.multiplicity[s[i] + s[j]];
    }
  out.count = out.multiplicity.size();
  return out;
}

DirectionCensus direction_census(const std::vector<AngleElem>& b, const std::vector<AngleElem>& g) {
  if (b.empty() || g.empty()) throw DegenerateInput("direction census needs nonempty B and G");
  DirectionCensus out;
  for (const auto& x : b)
    for (const auto& y : g) ++out.multiplicity[x + y];
  out.count = out.multiplicity.size();
  return out;
}

std::size_t piercing_counting_bound(std::size_t n) {
  if (n < 2) return 0;
  std::size_t chords = n * (n - 1) / 2;
  std::size_t per_point = std::max<std::size_t>(1, n / 2);
  return (chords + per_point - 1) / per_point;
}

namespace {

template <AbelianGroup G>
GateDiagnosis finish_gate(GateDiagnosis d, const StructureReport<G>& rep, ConicKind kind) {
  d.report = static_cast<const ReportCore&>(rep);
  if (!rep.pierced) {
    d.reason = "R does not pierce every line determined by the points";
    return d;
  }
  if (!rep.ratio_gate) {
    d.reason = "|R| >= 3n/2: outside the structured range";
    return d;
  }
  if (kind != ConicKind::ellipse && rep.n > 2) {
    d.reason = "Q must be an ellipse: the " + conic_kind_name(kind) + "'s group has no finite subgroup larger than " +
               std::to_string(*finite_subgroup_obstruction(kind));
    return d;
  }
  d.accepted = true;
  d.reason = "points on Q, R on ℓ, pierced, |R| < 3n/2";
  return d;
}

template <AbelianGroup G>
GateDiagnosis dispatch(GateDiagnosis d, const G& group, const std::map<Role, std::vector<typename G::Element>>& pts,
                       const std::vector<typename G::Element>& r, ConicKind kind) {
  GroupSet<G> rs(group, r);
  if (pts.count(Role::B)) {
    auto rep = analyze_bipartite(GroupSet<G>(group, pts.at(Role::B)), GroupSet<G>(group, pts.at(Role::G)), rs);
    return finish_gate(std::move(d), rep, kind);
  }
  auto rep = analyze_unipartite(GroupSet<G>(group, pts.at(Role::P)), rs);
  return finish_gate(std::move(d), rep, kind);
}

template <AbelianGroup G, class Pull>
GateDiagnosis pull_and_dispatch(GateDiagnosis d, const G& group, const std::map<Role, std::vector<ProjPoint<Rational>>>& pts,
                                const std::vector<ProjPoint<Rational>>& r_line, ConicKind kind, Pull extract) {
  std::map<Role, std::vector<typename G::Element>> pulled;
  for (const auto& [role, list] : pts)
    for (const auto& p : list) pulled[role].push_back(extract(pull_back_conic(p, kind)));
  std::vector<typename G::Element> r;
  for (const auto& p : r_line) {
    try {
      r.push_back(extract(pull_back_line(p, kind)));
    } catch (const DegenerateInput&) {
      // a direction no chord of the conic can have; it pierces nothing
    }
  }
  return dispatch(std::move(d), group, pulled, r, kind);
}

}  // namespace

GateDiagnosis reducible_case_gate(ConicKind kind, const PointConfig<Rational>& config) {
  GateDiagnosis d;
  const bool bip = config.has(Role::B);
  std::vector<Role> roles = bip ? std::vector<Role>{Role::B, Role::G} : std::vector<Role>{Role::P};
  for (Role role : roles)
    if (!config.has(role)) throw UsageError("configuration lacks role " + role_name(role));
  const std::size_t n = config[roles.front()].size();
  if (bip && config[Role::G].size() != n) throw UsageError("bipartite configurations need |B| = |G|");
  const std::size_t r_size = config.has(Role::R) ? config[Role::R].size() : 0;

  std::map<Role, std::vector<ProjPoint<Rational>>> on_q;
  std::size_t on_line = 0;
  for (Role role : roles) {
    for (const auto& p : config[role]) {
      if (p.at_infinity()) {
        ++on_line;
      } else if (on_conic(p, kind)) {
        on_q[role].push_back(p);
      } else {
        d.reason = "a point of " + role_name(role) + " lies on neither Q nor ℓ";
        return d;
      }
    }
  }
  if (on_line > 0) {
    // A point p of P on ℓ: the n-1 lines from p to Q meet ℓ only at p, so each needs
    // its own point of R off ℓ; the n-1 points on Q span at least n-2 directions.
    // With two points of P on ℓ, lines from both may share R points: n-2 and n-3.
    // Bipartite: n-1 and n-2.
    std::size_t forced = 0;
    if (bip) {
      forced = n >= 2 ? 2 * n - 3 : 0;
    } else if (on_line == 1) {
      forced = n >= 2 ? 2 * n - 3 : 0;
    } else {
      forced = n >= 3 ? 2 * n - 5 : 0;
    }
    d.forced_r_lower_bound = forced;
    d.reason = "a point of " + std::string(bip ? "B or G" : "P") + " lies on ℓ, forcing |R| >= " + std::to_string(forced);
    d.reason += r_size < forced ? " > |R| = " + std::to_string(r_size) : ", and |R| = " + std::to_string(r_size) + " meets it";
    return d;
  }

  std::vector<ProjPoint<Rational>> r_line;
  if (config.has(Role::R)) {
    for (const auto& p : config[Role::R]) {
      if (p.at_infinity()) {
        r_line.push_back(p);
      } else if (!on_conic(p, kind)) {
        d.reason = "a point of R lies on neither Q nor ℓ";
        return d;
      }
      // points of R on Q cannot lie on a chord of Q between two other points of Q
    }
  }

  switch (kind) {
    case ConicKind::parabola:
      return pull_and_dispatch(std::move(d), AdditiveRationals{}, on_q, r_line, kind,
                               [](const GTElement& e) { return e.value(); });
    case ConicKind::hyperbola:
      return pull_and_dispatch(std::move(d), MultiplicativeRationals{}, on_q, r_line, kind,
                               [](const GTElement& e) { return e.value(); });
    case ConicKind::ellipse:
      return pull_and_dispatch(std::move(d), CircleGroup{}, on_q, r_line, kind,
                               [](const GTElement& e) { return e.half_angle(); });
  }
  throw UsageError("unknown conic kind");
}

GateDiagnosis reducible_case_gate(const AngleConfig& config) {
  config.validate();
  std::map<Role, std::vector<AngleElem>> pts = config.roles;
  if (!pts.count(Role::P) && !pts.count(Role::B)) throw UsageError("configuration has no points");
  std::vector<AngleElem> r;
  for (const auto& c : config.directions) r.push_back(-c);
  return dispatch(GateDiagnosis{}, AngleGroup{}, pts, r, ConicKind::ellipse);
}

}  // namespace pierce
