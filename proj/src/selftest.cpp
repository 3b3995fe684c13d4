#include "pierce/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>

namespace pierce {

bool SelftestResult::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.ok(); });
}

std::vector<WeierstrassCurve<ModP>> small_curves(std::uint32_t p, std::size_t max_order) {
  std::vector<WeierstrassCurve<ModP>> out;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b) {
      try {
        WeierstrassCurve<ModP> c(ModP(p, a), ModP(p, b));
        if (enumerate_points(c).size() <= max_order) out.push_back(c);
      } catch (const DegenerateInput&) {
        // singular
      }
    }
  return out;
}

namespace {

void log_line(std::ostream* log, const oracle::SuiteReport& r, double seconds) {
  if (!log) return;
  *log << (r.ok() ? "ok   " : "FAIL ") << std::left << std::setw(12) << r.name << " cases " << r.cases
       << ", hypothesis met " << r.hypothesis_cases << ", generic re-checks " << r.generic_checks << ", failures "
       << r.failures << " (" << std::fixed << std::setprecision(2) << seconds << " s)\n";
  if (r.reproducer) *log << "     reproducer: " << *r.reproducer << "\n";
}

template <class Fn>
void timed(SelftestResult& res, std::ostream* log, const std::string& name, Fn fn) {
  auto t0 = std::chrono::steady_clock::now();
  oracle::SuiteReport r = fn();
  r.name = name;
  log_line(log, r, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  res.suites.push_back(std::move(r));
}

}  // namespace

SelftestResult run_selftest(const SelftestOptions& o, std::ostream* log) {
  using namespace oracle;
  if (o.lev_bound > 24) throw UsageError("--lev-bound is limited to 24");
  if (o.lemma_bound > 14) throw UsageError("--lemma-bound is limited to 14");
  if (o.lev_sample_bound > 64) throw UsageError("sampled Lev bound is limited to 64");
  SelftestResult res;
  if (o.suites.count("lev")) {
    timed(res, log, "lev", [&] {
      SuiteReport r;
      for (unsigned k = 1; k <= o.lev_bound; ++k) r.merge(lev_exhaustive(SmallGroup::cyclic(k)));
      for (const auto& g : small_noncyclic_groups(std::min(o.lev_bound, 16u))) r.merge(lev_exhaustive(g));
      for (unsigned k = o.lev_bound + 1; k <= o.lev_sample_bound; ++k) r.merge(lev_sampled(k, o.seed, o.lev_samples));
      return r;
    });
  }
  if (o.suites.count("lemma")) {
    timed(res, log, "lemma", [&] {
      SuiteReport r;
      for (unsigned k = 1; k <= o.lemma_bound; ++k) r.merge(lemma_exhaustive(SmallGroup::cyclic(k)));
      for (const auto& g : small_noncyclic_groups(o.lemma_bound)) r.merge(lemma_exhaustive(g));
      return r;
    });
  }
  if (o.suites.count("gt")) {
    timed(res, log, "gt", [&] {
      SuiteReport r;
      std::uint64_t s = o.seed;
      for (auto kind : {ConicKind::parabola, ConicKind::hyperbola, ConicKind::ellipse})
        r.merge(gt_samples(kind, o.gt_samples, s++, o.mutant));
      return r;
    });
  }
  if (o.suites.count("ec")) {
    timed(res, log, "ec", [&] {
      SuiteReport r;
      for (auto p : o.ec_primes)
        for (const auto& c : small_curves(p, o.ec_max_order)) r.merge(ec_exhaustive(c, o.mutant));
      return r;
    });
  }
  return res;
}

}  // namespace pierce
