#include "pierce/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pierce/analyzer.hpp"
#include "pierce/constructions.hpp"
#include "pierce/document.hpp"
#include "pierce/selftest.hpp"
#include "pierce/svg.hpp"

namespace pierce::cli {

namespace {

using nlohmann::json;

// ---- construct ----

struct ConstructArgs {
  std::string name;
  std::optional<int> m, k;
  std::optional<std::uint32_t> p;
  std::int64_t a = 0, b = 1;
  std::optional<std::size_t> subgroup_order;
  std::string out;
};

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

ConfigDocument fp_coset_document(const ConstructArgs& args) {
  if (!args.p) throw UsageError("fp-coset needs --p");
  if (!args.subgroup_order) throw UsageError("fp-coset needs --subgroup-order");
  const std::uint32_t p = *args.p;
  FieldSpec::prime(p);
  WeierstrassCurve<ModP> c(ModP(p, args.a), ModP(p, args.b));
  bool found_order = false;
  for (const auto& h : all_subgroups(c)) {
    if (h.size() != *args.subgroup_order) continue;
    found_order = true;
    if (auto g = admissible_offset(c, h)) {
      auto inst = fp_coset_instance(c, h, *g);
      std::map<Role, std::vector<ECPoint<ModP>>> sets{{Role::P, inst.P}};
      if (!inst.R.empty()) sets[Role::R] = inst.R;
      std::string name = "fp-coset p=" + std::to_string(p) + " a=" + element_to_string(c.a()) +
                         " b=" + element_to_string(c.b()) + " |H|=" + std::to_string(h.size());
      return ConfigDocument{ConfigDocument::kVersion, name, std::nullopt, CurveSets<ModP>{c, std::move(sets)}};
    }
  }
  if (!found_order) throw UsageError("the curve has no subgroup of order " + std::to_string(*args.subgroup_order));
  throw DegenerateInput("unsatisfiable: every offset g has 3g in H for each subgroup of order " +
                        std::to_string(*args.subgroup_order));
}

ConfigDocument build_document(const ConstructArgs& args) {
  auto angle = [](std::string name, AngleConfig cfg) {
    return ConfigDocument{ConfigDocument::kVersion, std::move(name), std::nullopt, std::move(cfg)};
  };
  auto planar = [](std::string name, PointConfig<Rational> cfg) {
    return ConfigDocument{ConfigDocument::kVersion, std::move(name), std::nullopt, std::move(cfg)};
  };
  const auto& n = args.name;
  if (n == "regular-mgon") {
    int m = require(args.m, "--m");
    return angle("regular-mgon m=" + std::to_string(m), angle_config_from_points(regular_mgon(m)));
  }
  if (n == "rotated-union") {
    int m = require(args.m, "--m");
    if (m < 3) throw UsageError("rotated-union needs --m >= 3");
    return angle("rotated-union m=" + std::to_string(m), rotated_union(m));
  }
  if (n == "bipartite") {
    int k = require(args.k, "--k");
    return angle("bipartite k=" + std::to_string(k), bipartite_construction(k));
  }
  if (n == "quadrilateral") return planar("complete quadrilateral", complete_quadrilateral());
  if (n == "three-line") return planar("three-line bipartite", three_line_bipartite());
  if (n == "two-point") return planar("two-point", two_point());
  if (n == "fp-coset") return fp_coset_document(args);
  throw UsageError("unknown construction '" + n +
                   "' (regular-mgon, rotated-union, bipartite, quadrilateral, three-line, fp-coset, two-point)");
}

int cmd_construct(const ConstructArgs& args, std::ostream& out) {
  auto doc = build_document(args);
  if (args.out.empty()) {
    out << dump_document(doc);
  } else {
    write_document(args.out, doc);
  }
  return kPass;
}

// ---- verify ----

template <ExactFieldElement F>
std::string point_text(const ProjPoint<F>& p) {
  return "(" + element_to_string(p.X()) + " : " + element_to_string(p.Y()) + " : " + element_to_string(p.Z()) + ")";
}

struct VerifyOutcome {
  std::optional<bool> general_position;  // nullopt: not applicable
  bool pierced = false;
  std::string witness;
  std::size_t n = 0, r = 0;
};

template <ExactFieldElement F>
VerifyOutcome verify_points(const std::map<Role, std::vector<ProjPoint<F>>>& roles) {
  auto get = [&](Role r) { return roles.count(r) ? roles.at(r) : std::vector<ProjPoint<F>>{}; };
  VerifyOutcome v;
  auto R = get(Role::R);
  v.r = R.size();
  PiercingVerdict<F> verdict;
  if (roles.count(Role::B)) {
    auto B = get(Role::B), G = get(Role::G);
    auto both = B;
    both.insert(both.end(), G.begin(), G.end());
    v.n = B.size();
    v.general_position = is_general_position<F>(both);
    verdict = check_piercing_bipartite<F>(B, G, R);
  } else {
    auto P = get(Role::P);
    v.n = P.size();
    v.general_position = is_general_position<F>(P);
    verdict = check_piercing<F>(P, R);
  }
  v.pierced = verdict.pierced;
  if (verdict.witness) v.witness = point_text(verdict.witness->first) + " - " + point_text(verdict.witness->second);
  return v;
}

VerifyOutcome verify_document(const ConfigDocument& doc) {
  return std::visit(
      [](const auto& p) -> VerifyOutcome {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PointConfig<Rational>> || std::is_same_v<T, PointConfig<ModP>>) {
          return verify_points(p.roles());
        } else if constexpr (std::is_same_v<T, AngleConfig>) {
          // distinct points of a circle are always in general position
          VerifyOutcome v;
          v.general_position = true;
          v.n = p.bipartite() ? p[Role::B].size() : p[Role::P].size();
          v.r = p.directions.size();
          auto missing = p.missing_directions();
          v.pierced = missing.empty();
          if (!v.pierced) v.witness = "direction class " + missing.front().to_string() + " is not in R";
          return v;
        } else if constexpr (std::is_same_v<T, FinGroupSets>) {
          VerifyOutcome v;
          auto get = [&](Role r) {
            return GroupSet<FinAbGroup>(p.group, p.sets.count(r) ? p.sets.at(r) : std::vector<FinAbGroup::Element>{});
          };
          auto negR = negated(get(Role::R));
          v.r = negR.size();
          std::optional<GroupSet<FinAbGroup>> sums;
          if (p.sets.count(Role::B)) {
            v.n = get(Role::B).size();
            sums = sumset(get(Role::B), get(Role::G));
          } else {
            v.n = get(Role::P).size();
            if (v.n >= 2) sums = restricted_sumset(get(Role::P));
          }
          v.pierced = !sums || is_subset(*sums, negR);
          if (!v.pierced) v.witness = "a sum of two points is not in -R";
          return v;
        } else {
          using F = std::decay_t<decltype(p.curve.a())>;
          std::map<Role, std::vector<ProjPoint<F>>> roles;
          for (const auto& [role, pts] : p.sets)
            for (const auto& q : pts) roles[role].push_back(to_projective(p.curve, q));
          return verify_points(roles);
        }
      },
      doc.payload);
}

int cmd_verify(const std::string& file, bool as_json, std::ostream& out) {
  auto doc = read_document(file);
  auto v = verify_document(doc);
  bool pass = v.pierced && v.general_position.value_or(true);
  if (as_json) {
    json j;
    j["representation"] = representation_name(doc.representation());
    j["n"] = v.n;
    j["r_size"] = v.r;
    j["general_position"] = v.general_position ? json(*v.general_position) : json(nullptr);
    j["pierced"] = v.pierced;
    j["witness"] = v.witness.empty() ? json(nullptr) : json(v.witness);
    j["pass"] = pass;
    out << j.dump(2) << "\n";
  } else {
    if (doc.name) out << *doc.name << "\n";
    out << "n = " << v.n << ", |R| = " << v.r << "\n";
    if (v.general_position) out << "general position: " << (*v.general_position ? "yes" : "no") << "\n";
    out << "pierced: " << (v.pierced ? "yes" : "no") << "\n";
    if (!v.witness.empty()) out << "unpierced: " << v.witness << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kPass : kPropertyFailure;
}

// ---- analyze ----

template <AbelianGroup G, class E>
json analyze_sets(const G& group, const std::map<Role, std::vector<E>>& sets) {
  auto get = [&](Role r) { return GroupSet<G>(group, sets.count(r) ? sets.at(r) : std::vector<E>{}); };
  if (sets.count(Role::B)) return report_json(analyze_bipartite(get(Role::B), get(Role::G), get(Role::R)));
  if (!sets.count(Role::P)) throw UsageError("nothing to analyze: no P or B/G sets");
  return report_json(analyze_unipartite(get(Role::P), get(Role::R)));
}

json gate_json(const GateDiagnosis& d) {
  json j;
  j["accepted"] = d.accepted;
  j["reason"] = d.reason;
  j["forced_r_lower_bound"] = d.forced_r_lower_bound ? json(*d.forced_r_lower_bound) : json(nullptr);
  j["report"] = d.report ? report_core_json(*d.report) : json(nullptr);
  return j;
}

int cmd_analyze(const std::string& file, std::ostream& out) {
  auto doc = read_document(file);
  json j = std::visit(
      [&](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PointConfig<Rational>>) {
          if (!doc.conic) throw UsageError("analysis requires group representation (or a planar document on a conic)");
          return json{{"gate", gate_json(reducible_case_gate(*doc.conic, p))}};
        } else if constexpr (std::is_same_v<T, PointConfig<ModP>>) {
          throw UsageError("analysis requires group representation");
        } else if constexpr (std::is_same_v<T, AngleConfig>) {
          // chords through a and b have class a + b, so -class is the group element of R
          auto sets = p.roles;
          for (const auto& d : p.directions) sets[Role::R].push_back(-d);
          return analyze_sets(AngleGroup{}, sets);
        } else if constexpr (std::is_same_v<T, FinGroupSets>) {
          return analyze_sets(p.group, p.sets);
        } else {
          return analyze_sets(CurveGroup(p.curve), p.sets);
        }
      },
      doc.payload);
  j["representation"] = representation_name(doc.representation());
  if (doc.name) j["name"] = *doc.name;
  out << j.dump(2) << "\n";
  return kPass;
}

// ---- minpierce ----

template <ExactFieldElement F>
int minpierce_points(const PointConfig<F>& cfg, std::size_t limit, std::ostream& out, std::ostream& err) {
  if (!cfg.has(Role::P)) throw UsageError("minpierce needs a P set");
  auto P = cfg[Role::P];
  auto res = min_piercing_number(P, limit);
  out << "n = " << P.size() << "\n";
  out << "counting bound: " << res.counting_bound << "\n";
  out << "arrangement vertices: " << res.candidate_vertices << "\n";
  if (!res.minimum) {
    out << "minimum: > " << limit << "\n";
    return kPass;
  }
  out << "minimum: " << *res.minimum << "\n";
  for (const auto& w : res.witness) out << "  " << point_text(w) << "\n";
  bool ok = *res.minimum >= res.counting_bound && res.witness.size() == *res.minimum &&
            check_piercing<F>(P, res.witness).pierced;
  if (!ok) {
    err << "minimum violates the counting bound or its witness does not pierce\n";
    return kPropertyFailure;
  }
  return kPass;
}

int cmd_minpierce(const std::string& file, std::size_t limit, std::ostream& out, std::ostream& err) {
  auto doc = read_document(file);
  if (const auto* p = std::get_if<PointConfig<Rational>>(&doc.payload)) return minpierce_points(*p, limit, out, err);
  if (const auto* p = std::get_if<PointConfig<ModP>>(&doc.payload)) return minpierce_points(*p, limit, out, err);
  throw UsageError("minpierce needs a planar document");
}

// ---- selftest ----

int cmd_selftest(SelftestOptions opts, const std::vector<std::string>& suites, const std::string& mutant,
                 std::ostream& out) {
  if (!suites.empty()) opts.suites = std::set<std::string>(suites.begin(), suites.end());
  for (const auto& s : opts.suites)
    if (s != "lev" && s != "lemma" && s != "gt" && s != "ec") throw UsageError("unknown suite '" + s + "'");
  if (mutant == "negated-determinant") {
    opts.mutant = oracle::Mutant::negated_determinant;
  } else if (!mutant.empty() && mutant != "none") {
    throw UsageError("unknown mutant '" + mutant + "'");
  }
  auto res = run_selftest(opts, &out);
  out << (res.ok() ? "selftest: PASS" : "selftest: FAIL") << "\n";
  return res.ok() ? kPass : kPropertyFailure;
}

// ---- plot ----

int cmd_plot(const std::string& file, const std::string& svg, double theta) {
  auto doc = read_document(file);
  PlotOptions opts;
  opts.theta = theta;
  auto text = render_svg(doc, opts);
  std::ofstream f(svg);
  if (!f) throw UsageError("cannot write '" + svg + "'");
  f << text;
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact piercing-set configurations: construct, verify, analyze, selftest, plot, minpierce", "pierce"};
  app.require_subcommand(1);

  ConstructArgs cons;
  auto* construct = app.add_subcommand("construct", "write a named configuration as JSON");
  construct->add_option("name", cons.name, "construction name")->required();
  construct->add_option("--m", cons.m, "polygon size");
  construct->add_option("--k", cons.k, "odd parameter of the bipartite construction");
  construct->add_option("--p", cons.p, "prime for fp-coset");
  construct->add_option("--a", cons.a, "curve coefficient a for fp-coset");
  construct->add_option("--b", cons.b, "curve coefficient b for fp-coset");
  construct->add_option("--subgroup-order", cons.subgroup_order, "order of H for fp-coset");
  construct->add_option("--out", cons.out, "output file (default: standard output)");

  std::string file;
  bool as_json = false;
  auto* verify = app.add_subcommand("verify", "check general position and piercing");
  verify->add_option("file", file, "configuration document")->required();
  verify->add_flag("--json", as_json, "print a JSON report");

  auto* analyze = app.add_subcommand("analyze", "recover coset structure in the configuration's group");
  analyze->add_option("file", file, "configuration document")->required();

  SelftestOptions st;
  std::vector<std::string> suites;
  std::string mutant;
  auto* selftest = app.add_subcommand("selftest", "run the brute-force oracle suites");
  selftest->add_option("--lev-bound", st.lev_bound, "exhaustive Lev sweep over Z_k for k up to this bound");
  selftest->add_option("--lemma-bound", st.lemma_bound, "exhaustive lemma sweep over Z_k for k up to this bound");
  selftest->add_option("--gt-samples", st.gt_samples, "random triples per conic kind");
  selftest->add_option("--seed", st.seed, "seed for sampled suites");
  selftest->add_option("--suite", suites, "lev, lemma, gt or ec (repeatable)");
  selftest->add_option("--mutant", mutant, "inject a fault: negated-determinant");

  std::string svg_out;
  double theta = PlotOptions{}.theta;
  auto* plot = app.add_subcommand("plot", "draw a configuration as SVG");
  plot->add_option("file", file, "configuration document")->required();
  plot->add_option("--out", svg_out, "SVG output file")->required();
  plot->add_option("--theta", theta, "display value of the formal rotation, in turns");

  std::size_t limit = 10;
  auto* minpierce = app.add_subcommand("minpierce", "exact minimum piercing set of a planar P");
  minpierce->add_option("file", file, "configuration document")->required();
  minpierce->add_option("--limit", limit, "largest size to search");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*construct) return cmd_construct(cons, out);
    if (*verify) return cmd_verify(file, as_json, out);
    if (*analyze) return cmd_analyze(file, out);
    if (*selftest) return cmd_selftest(st, suites, mutant, out);
    if (*plot) return cmd_plot(file, svg_out, theta);
    if (*minpierce) return cmd_minpierce(file, limit, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace pierce::cli
