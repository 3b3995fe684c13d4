#pragma once

// Independent brute-force checkers. Small groups are handled with 64-bit
// masks (cyclic groups by rotation, other groups by an addition table), so
// exhaustive sweeps do not go through the GroupSet code they are meant to check.
// Every case that meets a hypothesis is also re-run through the generic code
// and the two verdicts must agree.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pierce/abelian.hpp"
#include "pierce/conic_line.hpp"
#include "pierce/cubic.hpp"

namespace pierce::oracle {

using Mask = std::uint64_t;

/// A finite abelian group of order at most 64, elements numbered by FinAbGroup::index_of.
class SmallGroup {
 public:
  explicit SmallGroup(std::vector<std::int64_t> orders);
  static SmallGroup cyclic(unsigned k) { return SmallGroup({static_cast<std::int64_t>(k)}); }

  unsigned order() const { return k_; }
  bool is_cyclic() const { return cyclic_; }
  const FinAbGroup& group() const { return g_; }
  std::string name() const;
  Mask full() const { return k_ == 64 ? ~Mask{0} : (Mask{1} << k_) - 1; }

  Mask shift(Mask a, unsigned x) const;
  Mask negated(Mask a) const;
  Mask sumset(Mask a, Mask b) const;
  Mask restricted_sumset(Mask a) const;
  Mask stabilizer(Mask s) const;
  std::size_t doubling_constant() const;

  GroupSet<FinAbGroup> to_set(Mask a) const;
  std::string describe(Mask a) const;

 private:
  FinAbGroup g_;
  unsigned k_;
  bool cyclic_;
  std::vector<std::vector<std::uint8_t>> add_;
  std::vector<std::uint8_t> neg_;
};

/// Non-cyclic groups of order at most max_order (as products of cyclic factors).
std::vector<SmallGroup> small_noncyclic_groups(unsigned max_order);

struct SuiteReport {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t hypothesis_cases = 0;
  std::uint64_t generic_checks = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> reproducer;  // first failure in enumeration order

  bool ok() const { return failures == 0; }
  void fail(std::string what);
  void merge(const SuiteReport& part);
};

/// Whenever |A +. A| <= phi|A| - (L + 2), check A +. A = A + A. All subsets of g.
SuiteReport lev_exhaustive(const SmallGroup& g);

/// Structured random subsets of Z_k: unions of cosets, progressions, and their small perturbations.
SuiteReport lev_sampled(unsigned k, std::uint64_t seed, std::size_t samples);

/// All pairs A1, A2 of g meeting the size hypotheses: A1 + A2 is one coset of its
/// stabilizer H and each Ai lies in one coset of H.
SuiteReport lemma_exhaustive(const SmallGroup& g);

/// Injected faults for testing the tests.
enum class Mutant { none, negated_determinant };

/// Random rational triples: group-zero verdict against a determinant on phi_Q, phi_Q, phi_ell.
/// Half of the triples have z chosen to make x + y + z = 0.
SuiteReport gt_samples(ConicKind kind, std::size_t count, std::uint64_t seed, Mutant mutant = Mutant::none);

/// All triples of points: associativity, collinear iff sum zero for distinct triples,
/// the tangent at P through -2P; and tangents through every point of the plane at most 6.
SuiteReport ec_exhaustive(const WeierstrassCurve<ModP>& c, Mutant mutant = Mutant::none);

}  // namespace pierce::oracle
