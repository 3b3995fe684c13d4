#pragma once

// Executable versions of the structure arguments: from a piercing
// configuration viewed inside an abelian group, check each hypothesis gate
// (piercing, |R| < 3n/2, Lev's inequality, the A1+A2 lemma sizes), recover the
// subgroup H and the coset offsets, and report which gate failed instead of
// assuming it passed.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "pierce/abelian.hpp"
#include "pierce/conic_line.hpp"
#include "pierce/constructions.hpp"
#include "pierce/cubic.hpp"
#include "pierce/plane.hpp"

namespace pierce {

/// Group-independent part of a structure report.
struct ReportCore {
  bool bipartite = false;
  bool pierced = false;
  std::size_t n = 0;
  std::size_t r_size = 0;
  bool ratio_gate = false;                 // 2|R| < 3n
  std::size_t restricted_size = 0;         // |P +. P| (unipartite)
  std::size_t sumset_size = 0;             // |P + P| or |B + G|
  std::size_t doubling_constant = 0;       // L of the ambient group
  bool lev_applicable = false;
  std::optional<bool> restricted_equals_full;  // nullopt: not checked
  LemmaStatus lemma_status = LemmaStatus::hypothesis_not_met;
  std::string lemma_detail;
  std::string h_source = "none";           // "stabilizer", "difference-closure" or "none"
  std::optional<std::size_t> h_order;
  bool h_size_le_R = false;
  bool membership_verified = false;
  std::optional<std::size_t> minimal_coset_order;  // nullopt: infinite
  std::optional<bool> full_cosets;         // only when |R| = n
  std::optional<bool> short_argument;      // bipartite, |R| = n
  std::vector<std::string> diagnostics;
};

template <AbelianGroup G>
struct StructureReport : ReportCore {
  std::optional<SubgroupDescriptor<G>> H;       // offset = coset of P (or B)
  std::optional<typename G::Element> g_offset;  // coset of G (bipartite)
  SubgroupDescriptor<G> minimal_coset;
};

namespace detail {

template <AbelianGroup G>
bool is_coset_of(const GroupSet<G>& s, const SubgroupDescriptor<G>& h) {
  if (s.empty() || s.size() != h.order()) return false;
  const G& g = s.group();
  auto minus_base = g.negate(s.front());
  return std::all_of(s.begin(), s.end(), [&](const auto& e) { return h.contains(g.add(e, minus_base)); });
}

template <AbelianGroup G>
void check_doubling_bound(const G& group, ReportCore& rep) {
  rep.doubling_constant = doubling_constant(group);
  std::size_t bound = 0;
  if constexpr (std::is_same_v<G, CurveGroup<ModP>> || std::is_same_v<G, CurveGroup<Rational>>) {
    bound = 6;  // tangents through a point of an irreducible cubic
  } else if constexpr (std::is_same_v<G, AngleGroup> || std::is_same_v<G, CircleGroup> ||
                       std::is_same_v<G, MultiplicativeRationals> || std::is_same_v<G, AdditiveRationals>) {
    bound = 2;  // tangents to a conic through a point
  }
  if (bound && rep.doubling_constant > bound) {
    rep.diagnostics.push_back("doubling constant " + std::to_string(rep.doubling_constant) +
                              " exceeds the tangent bound " + std::to_string(bound));
  }
}

}  // namespace detail

/// Pipeline for P with every chord pierced by R: P +. P ⊆ -R, then Lev's
/// criterion for P +. P = P + P, then the A1+A2 lemma with A1 = A2 = P.
template <AbelianGroup G>
StructureReport<G> analyze_unipartite(const GroupSet<G>& P, const GroupSet<G>& R) {
  require_same_group(P, R);
  if (P.empty()) throw DegenerateInput("analysis needs a nonempty P");
  const G& g = P.group();
  StructureReport<G> rep;
  rep.n = P.size();
  rep.r_size = R.size();
  rep.ratio_gate = 2 * rep.r_size < 3 * rep.n;
  detail::check_doubling_bound(g, rep);

  auto full = sumset(P, P);
  rep.sumset_size = full.size();
  if (rep.n >= 2) {
    auto restricted = restricted_sumset(P);
    rep.restricted_size = restricted.size();
    rep.pierced = is_subset(restricted, negated(R));
    rep.lev_applicable = lev_inequality(rep.restricted_size, rep.doubling_constant, rep.n);
    if (rep.lev_applicable) {
      rep.restricted_equals_full = restricted == full;
      if (!*rep.restricted_equals_full) rep.diagnostics.push_back("Lev conclusion fails: P+.P != P+P");
    } else {
      rep.diagnostics.push_back("Lev hypothesis fails: |P+.P| = " + std::to_string(rep.restricted_size) +
                                " > phi*n - (L+2) with n = " + std::to_string(rep.n) +
                                ", L = " + std::to_string(rep.doubling_constant));
    }
  } else {
    rep.pierced = true;  // no chords
    rep.diagnostics.push_back("n = 1: no chords to pierce");
  }
  if (!rep.pierced) rep.diagnostics.push_back("piercing fails: P+.P is not contained in -R");
  if (!rep.ratio_gate) rep.diagnostics.push_back("ratio gate fails: |R| >= 3n/2");

  auto lemma = check_lemma_AB(P, P);
  rep.lemma_status = lemma.status;
  rep.lemma_detail = lemma.detail;
  if (lemma.status == LemmaStatus::counterexample) rep.diagnostics.push_back("A1+A2 lemma violated: " + lemma.detail);

  rep.minimal_coset = minimal_containing_coset(P);
  if (rep.minimal_coset.finite) rep.minimal_coset_order = rep.minimal_coset.order();

  if (lemma.status == LemmaStatus::holds) {
    rep.H = *lemma.stabilizer;
    rep.H->offset = P.front();
    rep.h_source = "stabilizer";
  } else if (rep.minimal_coset.finite) {
    rep.H = rep.minimal_coset;
    rep.h_source = "difference-closure";
  }
  if (rep.H) {
    rep.h_order = rep.H->order();
    rep.h_size_le_R = rep.H->order() <= rep.r_size;
    rep.membership_verified =
        std::all_of(P.begin(), P.end(), [&](const auto& p) { return rep.H->coset_contains(g, p); });
    if (!rep.membership_verified) rep.diagnostics.push_back("P is not inside offset + H");
    if (rep.r_size == rep.n) {
      rep.full_cosets = detail::is_coset_of(P, *rep.H) && detail::is_coset_of(negated(R), *rep.H);
    }
  } else {
    rep.diagnostics.push_back("no finite subgroup H contains the differences of P");
  }
  return rep;
}

/// Pipeline for B, G with every B-G line pierced by R: B + G ⊆ -R, then the
/// A1+A2 lemma with A1 = B, A2 = G; when |R| = n also the direct argument
/// with B' = -B + b, G' = -G + g.
template <AbelianGroup G>
StructureReport<G> analyze_bipartite(const GroupSet<G>& B, const GroupSet<G>& Gs, const GroupSet<G>& R) {
  require_same_group(B, Gs);
  require_same_group(B, R);
  if (B.size() != Gs.size()) throw UsageError("bipartite analysis needs |B| = |G|");
  if (B.empty()) throw DegenerateInput("analysis needs nonempty B and G");
  const G& g = B.group();
  StructureReport<G> rep;
  rep.bipartite = true;
  rep.n = B.size();
  rep.r_size = R.size();
  rep.ratio_gate = 2 * rep.r_size < 3 * rep.n;
  detail::check_doubling_bound(g, rep);

  auto sum = sumset(B, Gs);
  rep.sumset_size = sum.size();
  rep.pierced = is_subset(sum, negated(R));
  if (!rep.pierced) rep.diagnostics.push_back("piercing fails: B+G is not contained in -R");
  if (!rep.ratio_gate) rep.diagnostics.push_back("ratio gate fails: |R| >= 3n/2");

  auto lemma = check_lemma_AB(B, Gs);
  rep.lemma_status = lemma.status;
  rep.lemma_detail = lemma.detail;
  if (lemma.status == LemmaStatus::counterexample) rep.diagnostics.push_back("A1+A2 lemma violated: " + lemma.detail);

  std::vector<GroupSet<G>> both{B, Gs};
  rep.minimal_coset = minimal_common_coset<G>(both);
  if (rep.minimal_coset.finite) rep.minimal_coset_order = rep.minimal_coset.order();

  if (lemma.status == LemmaStatus::holds) {
    rep.H = *lemma.stabilizer;
    rep.H->offset = B.front();
    rep.h_source = "stabilizer";
  } else if (rep.minimal_coset.finite) {
    rep.H = rep.minimal_coset;
    rep.h_source = "difference-closure";
  }
  if (rep.H) {
    rep.g_offset = Gs.front();
    rep.h_order = rep.H->order();
    rep.h_size_le_R = rep.H->order() <= rep.r_size;
    auto inside = [&](const GroupSet<G>& s, const typename G::Element& off) {
      return std::all_of(s.begin(), s.end(), [&](const auto& e) { return rep.H->contains(g.add(e, g.negate(off))); });
    };
    rep.membership_verified = inside(B, rep.H->offset) && inside(Gs, *rep.g_offset);
    if (!rep.membership_verified) rep.diagnostics.push_back("B or G is not inside a coset of H");
    if (rep.r_size == rep.n) {
      rep.full_cosets = detail::is_coset_of(B, *rep.H) && detail::is_coset_of(Gs, *rep.H) &&
                        detail::is_coset_of(negated(R), *rep.H);
    }
  } else {
    rep.diagnostics.push_back("no finite subgroup H has B and G each inside one coset");
  }

  if (rep.r_size == rep.n) {
    // B' = -B + b, G' = -G + g contain 0 and B' + G' = -(R + b + g) has n elements.
    auto bp = translate(negated(B), B.front());
    auto gp = translate(negated(Gs), Gs.front());
    auto bg = sumset(bp, gp);
    bool closed = bp == gp && bp == bg;
    rep.short_argument = closed;
    if (closed && rep.H && !(bp.elements() == rep.H->members)) {
      rep.diagnostics.push_back("short argument found a subgroup different from the stabilizer");
    }
  }
  return rep;
}

struct DirectionCensus {
  std::map<AngleElem, std::size_t> multiplicity;
  std::size_t count = 0;
};

/// Chord classes a + b over unordered pairs of distinct points of S, with multiplicities.
DirectionCensus direction_census(const std::vector<AngleElem>& s);

/// Classes b + g over all b in B, g in G.
DirectionCensus direction_census(const std::vector<AngleElem>& b, const std::vector<AngleElem>& g);

inline constexpr std::size_t kMinPiercingMaxPoints = 8;

/// ceil(C(n,2) / floor(n/2)): a point outside P lies on at most floor(n/2) chords.
std::size_t piercing_counting_bound(std::size_t n);

template <ExactFieldElement F>
struct MinPiercing {
  std::optional<std::size_t> minimum;  // nullopt: more than `limit` points needed
  std::size_t counting_bound = 0;
  std::size_t candidate_vertices = 0;
  std::vector<ProjPoint<F>> witness;   // an optimal piercing set
};

namespace detail {

// A point of `line` outside `avoid`: tried against x = k, y = k and the line at infinity.
template <ExactFieldElement F>
ProjPoint<F> free_point_on(const ProjLine<F>& line, const std::set<ProjPoint<F>>& avoid) {
  const F zero = constant_like(line.a(), 0);
  const F one = constant_like(line.a(), 1);
  std::vector<ProjLine<F>> probes{ProjLine<F>(zero, zero, one)};
  for (std::int64_t k = 0; k < 8; ++k) {
    probes.emplace_back(one, zero, constant_like(line.a(), -k));
    probes.emplace_back(zero, one, constant_like(line.a(), -k));
  }
  for (const auto& probe : probes) {
    if (probe == line) continue;
    auto x = meet(line, probe);
    if (!avoid.count(x)) return x;
  }
  throw DegenerateInput("no free point found on a determined line");
}

struct CoverSearch {
  std::uint32_t all = 0;
  std::size_t max_cover = 1;
  std::vector<std::uint32_t> masks;                  // candidate vertices
  std::vector<std::vector<std::size_t>> by_line;     // candidates through each line
  std::size_t best = 0;
  std::vector<int> chosen, best_choice;              // candidate index, or -1 - line for a free point

  void run(std::uint32_t covered, std::size_t used) {
    if (covered == all) {
      if (used < best) {
        best = used;
        best_choice = chosen;
      }
      return;
    }
    std::uint32_t open = all & ~covered;
    std::size_t rem = static_cast<std::size_t>(std::popcount(open));
    if (used + (rem + max_cover - 1) / max_cover >= best) return;
    std::size_t line = 0, fewest = SIZE_MAX;
    for (std::uint32_t m = open; m; m &= m - 1) {
      auto l = static_cast<std::size_t>(std::countr_zero(m));
      if (by_line[l].size() < fewest) {
        fewest = by_line[l].size();
        line = l;
      }
    }
    std::vector<std::size_t> options = by_line[line];
    std::sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
      return std::popcount(masks[a] & open) > std::popcount(masks[b] & open);
    });
    for (auto c : options) {
      chosen.push_back(static_cast<int>(c));
      run(covered | masks[c], used + 1);
      chosen.pop_back();
    }
    chosen.push_back(-1 - static_cast<int>(line));
    run(covered | (1u << line), used + 1);
    chosen.pop_back();
  }
};

}  // namespace detail

/// Exact minimum size of a set R, disjoint from P, meeting every line spanned by P.
/// Any point on two or more of these lines is an arrangement vertex, so the search
/// ranges over vertices plus one free point per otherwise-uncovered line.
template <ExactFieldElement F>
MinPiercing<F> min_piercing_number(std::span<const ProjPoint<F>> P, std::size_t limit,
                                   std::size_t max_points = kMinPiercingMaxPoints) {
  if (P.size() < 2) throw DegenerateInput("min piercing needs at least two points");
  if (P.size() > max_points) {
    throw Unsupported("min piercing is limited to " + std::to_string(max_points) + " points");
  }
  if (!is_general_position(P)) throw UsageError("min piercing expects P in general position");
  const std::set<ProjPoint<F>> in_p(P.begin(), P.end());
  std::vector<ProjLine<F>> lines;
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j) lines.push_back(line_through(P[i], P[j]));

  std::map<ProjPoint<F>, std::uint32_t> vertices;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto v = meet(lines[i], lines[j]);
      if (in_p.count(v) || vertices.count(v)) continue;
      std::uint32_t mask = 0;
      for (std::size_t l = 0; l < lines.size(); ++l)
        if (incident(v, lines[l])) mask |= 1u << l;
      vertices.emplace(v, mask);
    }

  MinPiercing<F> out;
  out.counting_bound = piercing_counting_bound(P.size());
  out.candidate_vertices = vertices.size();

  detail::CoverSearch search;
  search.all = lines.size() == 32 ? ~0u : (1u << lines.size()) - 1;
  search.max_cover = std::max<std::size_t>(1, P.size() / 2);
  search.by_line.resize(lines.size());
  std::vector<ProjPoint<F>> vertex_points;
  for (const auto& [v, mask] : vertices) {
    for (std::uint32_t m = mask; m; m &= m - 1) search.by_line[std::countr_zero(m)].push_back(search.masks.size());
    search.masks.push_back(mask);
    vertex_points.push_back(v);
  }
  search.best = limit + 1;
  search.run(0, 0);
  if (search.best > limit) return out;

  out.minimum = search.best;
  std::set<ProjPoint<F>> chosen;
  for (int c : search.best_choice) {
    if (c >= 0) {
      chosen.insert(vertex_points[static_cast<std::size_t>(c)]);
    } else {
      std::set<ProjPoint<F>> avoid = in_p;
      avoid.insert(chosen.begin(), chosen.end());
      chosen.insert(detail::free_point_on(lines[static_cast<std::size_t>(-1 - c)], avoid));
    }
  }
  out.witness.assign(chosen.begin(), chosen.end());
  return out;
}

/// Outcome of checking a configuration against a conic + line cubic.
struct GateDiagnosis {
  bool accepted = false;
  std::string reason;
  std::optional<std::size_t> forced_r_lower_bound;  // set when a point of P (B ∪ G) lies on ℓ
  std::optional<ReportCore> report;                 // analysis in the conic's group, when dispatched
};

/// Configuration in the plane over Q, with the conic in canonical position and ℓ at infinity.
GateDiagnosis reducible_case_gate(ConicKind kind, const PointConfig<Rational>& config);

/// Circle configuration given by angle parameters (points on Q, R on ℓ by construction).
GateDiagnosis reducible_case_gate(const AngleConfig& config);

}  // namespace pierce
