#include "pierce/oracles.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <sstream>

namespace pierce::oracle {

SmallGroup::SmallGroup(std::vector<std::int64_t> orders) : g_(std::move(orders)), k_(0), cyclic_(false) {
  if (g_.order() == 0 || g_.order() > 64) throw UsageError("small groups must have order 1..64");
  k_ = static_cast<unsigned>(g_.order());
  cyclic_ = g_.orders().size() == 1;
  add_.assign(k_, std::vector<std::uint8_t>(k_));
  neg_.resize(k_);
  for (unsigned i = 0; i < k_; ++i) {
    auto a = g_.at(i);
    neg_[i] = static_cast<std::uint8_t>(g_.index_of(g_.negate(a)));
    for (unsigned j = 0; j < k_; ++j) add_[i][j] = static_cast<std::uint8_t>(g_.index_of(g_.add(a, g_.at(j))));
  }
}

std::string SmallGroup::name() const {
  std::string out;
  for (auto o : g_.orders()) out += (out.empty() ? "Z_" : " x Z_") + std::to_string(o);
  return out;
}

Mask SmallGroup::shift(Mask a, unsigned x) const {
  if (cyclic_) {
    if (x == 0) return a;
    return ((a << x) | (a >> (k_ - x))) & full();
  }
  Mask out = 0;
  for (Mask m = a; m; m &= m - 1) out |= Mask{1} << add_[static_cast<unsigned>(std::countr_zero(m))][x];
  return out;
}

Mask SmallGroup::negated(Mask a) const {
  Mask out = 0;
  for (Mask m = a; m; m &= m - 1) out |= Mask{1} << neg_[static_cast<unsigned>(std::countr_zero(m))];
  return out;
}

Mask SmallGroup::sumset(Mask a, Mask b) const {
  Mask out = 0;
  for (Mask m = b; m; m &= m - 1) out |= shift(a, static_cast<unsigned>(std::countr_zero(m)));
  return out;
}

Mask SmallGroup::restricted_sumset(Mask a) const {
  Mask out = 0;
  for (Mask m = a; m; m &= m - 1) {
    Mask bit = m & -m;
    out |= shift(a & ~bit, static_cast<unsigned>(std::countr_zero(m)));
  }
  return out;
}

Mask SmallGroup::stabilizer(Mask s) const {
  if (!s) return full();
  Mask out = 0;
  for (unsigned x = 0; x < k_; ++x)
    if (shift(s, x) == s) out |= Mask{1} << x;
  return out;
}

std::size_t SmallGroup::doubling_constant() const {
  std::size_t best = 0;
  for (unsigned a = 0; a < k_; ++a) {
    std::size_t c = 0;
    for (unsigned x = 0; x < k_; ++x) c += add_[x][x] == a;
    best = std::max(best, c);
  }
  return best;
}

GroupSet<FinAbGroup> SmallGroup::to_set(Mask a) const {
  std::vector<FinAbGroup::Element> el;
  for (Mask m = a; m; m &= m - 1) el.push_back(g_.at(static_cast<unsigned>(std::countr_zero(m))));
  return GroupSet<FinAbGroup>(g_, std::move(el));
}

std::string SmallGroup::describe(Mask a) const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (Mask m = a; m; m &= m - 1) {
    auto e = g_.at(static_cast<unsigned>(std::countr_zero(m)));
    os << (first ? "" : ", ");
    first = false;
    if (e.size() == 1) {
      os << e[0];
    } else {
      os << "(";
      for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
      os << ")";
    }
  }
  os << "} in " << name();
  return os.str();
}

std::vector<SmallGroup> small_noncyclic_groups(unsigned max_order) {
  const std::vector<std::vector<std::int64_t>> all{{2, 2},    {2, 4},    {2, 2, 2}, {3, 3},    {2, 6},
                                                   {2, 8},    {4, 4},    {2, 2, 4}, {2, 2, 2, 2}, {3, 6},
                                                   {2, 10},   {2, 2, 6}, {2, 12},   {4, 6}};
  std::vector<SmallGroup> out;
  for (const auto& o : all) {
    std::int64_t prod = 1;
    for (auto x : o) prod *= x;
    if (prod <= static_cast<std::int64_t>(max_order)) out.emplace_back(o);
  }
  return out;
}

void SuiteReport::fail(std::string what) {
  if (!reproducer) reproducer = std::move(what);
  ++failures;
}

void SuiteReport::merge(const SuiteReport& part) {
  cases += part.cases;
  hypothesis_cases += part.hypothesis_cases;
  generic_checks += part.generic_checks;
  failures += part.failures;
  if (!reproducer && part.reproducer) reproducer = part.reproducer;
}

namespace {

// floor(phi * n) from an exact integer square root of 5n^2.
std::uint64_t floor_phi_times(std::uint64_t n) {
  std::uint64_t sq = 5 * n * n;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(sq)));
  while (r * r > sq) --r;
  while ((r + 1) * (r + 1) <= sq) ++r;
  return (n + r) / 2;
}

void lev_case(const SmallGroup& g, Mask a, std::size_t L, SuiteReport& rep) {
  auto n = static_cast<std::uint64_t>(std::popcount(a));
  if (n < 2) return;
  ++rep.cases;
  Mask restricted = g.restricted_sumset(a);
  auto s = static_cast<std::uint64_t>(std::popcount(restricted));
  bool hyp = s + L + 2 <= floor_phi_times(n);
  auto set = hyp || rep.cases % 4096 == 0 ? std::optional(g.to_set(a)) : std::nullopt;
  if (set) {
    ++rep.generic_checks;
    if (lev_hypothesis_holds(*set) != hyp) rep.fail("Lev hypothesis disagrees with the generic code on " + g.describe(a));
  }
  if (!hyp) return;
  ++rep.hypothesis_cases;
  bool equal = restricted == g.sumset(a, a);
  if (!equal) rep.fail("Lev: A+.A != A+A for A = " + g.describe(a));
  if (check_lev_conclusion(*set) != equal) rep.fail("Lev conclusion disagrees with the generic code on " + g.describe(a));
}

}  // namespace

SuiteReport lev_exhaustive(const SmallGroup& g) {
  if (g.order() > 24) throw UsageError("exhaustive Lev sweep is limited to order 24");
  SuiteReport rep;
  rep.name = "lev " + g.name();
  const std::size_t L = g.doubling_constant();
  for (Mask a = 1; a <= g.full(); ++a) lev_case(g, a, L, rep);
  return rep;
}

SuiteReport lev_sampled(unsigned k, std::uint64_t seed, std::size_t samples) {
  SmallGroup g = SmallGroup::cyclic(k);
  SuiteReport rep;
  rep.name = "lev sampled " + g.name();
  const std::size_t L = g.doubling_constant();
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * k));
  auto pick = [&](unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng); };
  std::vector<unsigned> divisors;
  for (unsigned d = 1; d <= k; ++d)
    if (k % d == 0) divisors.push_back(d);
  for (std::size_t i = 0; i < samples; ++i) {
    Mask a = 0;
    if (i % 2 == 0) {
      // union of cosets of the subgroup of order d
      unsigned d = divisors[pick(0, static_cast<unsigned>(divisors.size()) - 1)];
      unsigned step = k / d;
      Mask h = 0;
      for (unsigned j = 0; j < d; ++j) h |= Mask{1} << (j * step);
      unsigned cosets = pick(1, std::max(1u, std::min(step, 3u)));
      for (unsigned c = 0; c < cosets; ++c) a |= g.shift(h, pick(0, step - 1));
    } else {
      // arithmetic progression
      unsigned diff = pick(1, k - 1), len = pick(2, k), start = pick(0, k - 1);
      for (unsigned j = 0; j < len; ++j) a |= Mask{1} << ((start + j * diff) % k);
    }
    for (unsigned flips = pick(0, 3); flips; --flips) a ^= Mask{1} << pick(0, k - 1);
    lev_case(g, a, L, rep);
  }
  return rep;
}

SuiteReport lemma_exhaustive(const SmallGroup& g) {
  if (g.order() > 16) throw UsageError("exhaustive lemma sweep is limited to order 16");
  SuiteReport rep;
  rep.name = "lemma " + g.name();
  auto in_one_coset = [&](Mask a, Mask h) {
    unsigned base = static_cast<unsigned>(std::countr_zero(a));
    return (g.shift(a, g.group().index_of(g.group().negate(g.group().at(base)))) & ~h) == 0;
  };
  for (Mask a1 = 1; a1 <= g.full(); ++a1) {
    auto n1 = static_cast<unsigned>(std::popcount(a1));
    for (Mask a2 = 1; a2 <= g.full(); ++a2) {
      auto n2 = static_cast<unsigned>(std::popcount(a2));
      if (n2 > n1 || 4 * n2 < 3 * n1) continue;
      ++rep.cases;
      Mask s = g.sumset(a1, a2);
      auto ns = static_cast<unsigned>(std::popcount(s));
      if (2 * ns >= 3 * n1) continue;
      ++rep.hypothesis_cases;
      Mask h = g.stabilizer(s);
      bool holds = std::popcount(h) == static_cast<int>(ns) && in_one_coset(s, h) && in_one_coset(a1, h) &&
                   in_one_coset(a2, h);
      if (!holds) rep.fail("lemma fails for A1 = " + g.describe(a1) + ", A2 = " + g.describe(a2));
      ++rep.generic_checks;
      auto v = check_lemma_AB(g.to_set(a1), g.to_set(a2));
      if ((v.status == LemmaStatus::holds) != holds) {
        rep.fail("lemma verdict disagrees with the generic code on A1 = " + g.describe(a1) +
                 ", A2 = " + g.describe(a2));
      }
    }
  }
  return rep;
}

namespace {

template <ExactFieldElement F>
bool mutated_collinear(const ProjPoint<F>& p, const ProjPoint<F>& q, const ProjPoint<F>& r, Mutant m) {
  bool c = collinear(p, q, r);
  return m == Mutant::negated_determinant ? !c : c;
}

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<std::int64_t> num(-40, 40), den(1, 25);
  for (;;) {
    Rational r = make_rational(num(rng), den(rng));
    if (!nonzero || !is_zero(r)) return r;
  }
}

GTElement random_element(ConicKind kind, std::mt19937_64& rng) {
  switch (kind) {
    case ConicKind::parabola: return GTElement::parabola(random_rational(rng, false));
    case ConicKind::hyperbola: return GTElement::hyperbola(random_rational(rng, true));
    case ConicKind::ellipse:
      if (std::uniform_int_distribution<int>(0, 19)(rng) == 0) return GTElement::ellipse(HalfAngle::infinity());
      return GTElement::ellipse_tan(random_rational(rng, false));
  }
  throw UsageError("unknown conic kind");
}

std::string gt_text(const GTElement& e) {
  if (e.kind() != ConicKind::ellipse) return to_string(e.value());
  return "[" + to_string(e.half_angle().c()) + " : " + to_string(e.half_angle().s()) + "]";
}

}  // namespace

SuiteReport gt_samples(ConicKind kind, std::size_t count, std::uint64_t seed, Mutant mutant) {
  SuiteReport rep;
  rep.name = "gt " + conic_kind_name(kind);
  std::mt19937_64 rng(seed);
  while (rep.cases < count) {
    GTElement x = random_element(kind, rng), y = random_element(kind, rng);
    if (x == y) continue;
    GTElement z = rep.cases % 2 == 0 ? gt_negate(gt_add(x, y)) : random_element(kind, rng);
    ++rep.cases;
    bool zero = gt_is_identity(gt_add(gt_add(x, y), z));
    if (zero) ++rep.hypothesis_cases;
    bool col = mutated_collinear(phi_Q(x), phi_Q(y), phi_ell(z), mutant);
    if (zero != col) {
      rep.fail(conic_kind_name(kind) + ": x = " + gt_text(x) + ", y = " + gt_text(y) + ", z = " + gt_text(z) +
               (zero ? " sum to zero but are not collinear" : " are collinear but do not sum to zero"));
    }
  }
  return rep;
}

SuiteReport ec_exhaustive(const WeierstrassCurve<ModP>& c, Mutant mutant) {
  SuiteReport rep;
  const std::uint32_t p = c.a().modulus();
  rep.name = "ec y^2 = x^3 + " + element_to_string(c.a()) + "x + " + element_to_string(c.b()) + " over F_" +
             std::to_string(p);
  auto pts = enumerate_points(c);
  auto text = [&](const ECPoint<ModP>& q) {
    if (q.is_identity()) return std::string("O");
    return "(" + element_to_string(q.x()) + "," + element_to_string(q.y()) + ")";
  };
  std::vector<ProjPoint<ModP>> proj;
  for (const auto& q : pts) proj.push_back(to_projective(c, q));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const auto& P = pts[i];
      const auto& Q = pts[j];
      auto pq = add(c, P, Q);
      if (!(negate(c, pq) == chord_third(c, P, Q))) rep.fail("chord_third != -(P+Q) at P = " + text(P) + ", Q = " + text(Q));
      if (i == j && !P.is_identity()) {
        ++rep.cases;
        if (!incident(to_projective(c, tangent_third(c, P)), tangent_line(c, P))) {
          rep.fail("tangent at " + text(P) + " misses -2P");
        }
      }
      for (std::size_t k = 0; k < pts.size(); ++k) {
        const auto& R = pts[k];
        ++rep.cases;
        if (!(add(c, pq, R) == add(c, P, add(c, Q, R)))) {
          rep.fail("associativity fails at P = " + text(P) + ", Q = " + text(Q) + ", R = " + text(R));
        }
        if (i < j && j < k) {
          bool zero = add(c, pq, R).is_identity();
          if (zero) ++rep.hypothesis_cases;
          if (zero != mutated_collinear(proj[i], proj[j], proj[k], mutant)) {
            rep.fail(text(P) + ", " + text(Q) + ", " + text(R) +
                     (zero ? " sum to O but are not collinear" : " are collinear but do not sum to O") + " on " +
                     rep.name.substr(3));
          }
        }
      }
    }
  }
  // tangents through every point of P^2(F_p)
  std::vector<ProjPoint<ModP>> plane;
  const ModP zero(p, 0), one(p, 1);
  for (std::uint32_t x = 0; x < p; ++x)
    for (std::uint32_t y = 0; y < p; ++y) plane.emplace_back(ModP(p, x), ModP(p, y), one);
  for (std::uint32_t x = 0; x < p; ++x) plane.emplace_back(one, ModP(p, x), zero);
  plane.emplace_back(zero, one, zero);
  for (const auto& a : plane) {
    ++rep.cases;
    auto t = tangent_count_through(a, c);
    if (t > 6) rep.fail(std::to_string(t) + " tangents pass through one point");
  }
  return rep;
}

}  // namespace pierce::oracle
