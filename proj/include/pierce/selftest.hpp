#pragma once

// Oracle suites behind `pierce selftest`.

#include <cstdint>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "pierce/oracles.hpp"

namespace pierce {

struct SelftestOptions {
  unsigned lev_bound = 18;         // exhaustive over Z_k, k <= lev_bound
  unsigned lev_sample_bound = 40;  // seeded samples over Z_k up to this k
  std::size_t lev_samples = 400;   // per k
  unsigned lemma_bound = 11;       // exhaustive pairs over Z_k, k <= lemma_bound
  std::size_t gt_samples = 1000;   // per conic kind
  std::vector<std::uint32_t> ec_primes{5, 7};
  std::size_t ec_max_order = 30;
  std::set<std::string> suites{"lev", "lemma", "gt", "ec"};
  oracle::Mutant mutant = oracle::Mutant::none;
  std::uint64_t seed = 20240611;
};

struct SelftestResult {
  std::vector<oracle::SuiteReport> suites;
  bool ok() const;
};

/// Runs the selected suites; one summary line per suite goes to `log` when given.
SelftestResult run_selftest(const SelftestOptions& opts, std::ostream* log = nullptr);

/// Every nonsingular y^2 = x^3 + ax + b over F_p with at most max_order points.
std::vector<WeierstrassCurve<ModP>> small_curves(std::uint32_t p, std::size_t max_order);

}  // namespace pierce
