#include "pierce/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pierce {

using nlohmann::json;

std::string representation_name(Representation r) {
  switch (r) {
    case Representation::planar: return "planar";
    case Representation::angle: return "angle";
    case Representation::ec: return "ec";
    case Representation::group: return "group";
  }
  return "?";
}

namespace {

Representation parse_representation(const std::string& s) {
  if (s == "planar") return Representation::planar;
  if (s == "angle") return Representation::angle;
  if (s == "ec") return Representation::ec;
  if (s == "group") return Representation::group;
  throw SchemaError("unknown representation '" + s + "'");
}

}  // namespace

FieldSpec ConfigDocument::field() const {
  return std::visit(
      [](const auto& p) -> FieldSpec {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PointConfig<Rational>> || std::is_same_v<T, PointConfig<ModP>>) {
          return p.field();
        } else if constexpr (std::is_same_v<T, CurveSets<Rational>> || std::is_same_v<T, CurveSets<ModP>>) {
          return p.curve.field();
        } else {
          return FieldSpec::rational();
        }
      },
      payload);
}

Representation ConfigDocument::representation() const {
  switch (payload.index()) {
    case 0:
    case 1: return Representation::planar;
    case 2: return Representation::angle;
    case 3:
    case 4: return Representation::ec;
    default: return Representation::group;
  }
}

json encode(const Rational& x) { return to_string(x); }
json encode(const ModP& x) { return element_to_string(x); }
json encode(const AngleElem& e) { return {{"q", to_string(e.q())}, {"c", e.theta_coeff()}}; }
json encode(const HalfAngle& h) { return json::array({to_string(h.c()), to_string(h.s())}); }
json encode(const FinAbGroup::Element& e) { return json(e); }

namespace {

const std::set<std::string> kTopKeys{"version", "name", "field", "representation", "curve", "group", "sets"};

template <class E, class Enc>
json encode_sets(const std::map<Role, std::vector<E>>& sets, Enc enc) {
  json out = json::object();
  for (const auto& [role, list] : sets) {
    json arr = json::array();
    for (const auto& e : list) arr.push_back(enc(e));
    out[role_name(role)] = arr;
  }
  return out;
}

const std::string& need_string(const json& j, const char* what) {
  if (!j.is_string()) throw SchemaError(std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

template <ExactFieldElement F>
F parse_element(const json& j, const FieldSpec& field) {
  const auto& s = need_string(j, "field element");
  if constexpr (std::is_same_v<F, Rational>) {
    return parse_rational_element(s);
  } else {
    return parse_modp_element(s, field.p);
  }
}

template <ExactFieldElement F>
ProjPoint<F> parse_planar(const json& j, const FieldSpec& field) {
  if (!j.is_array() || (j.size() != 2 && j.size() != 3)) {
    throw SchemaError("planar points are [x, y] or [X, Y, Z]");
  }
  if (j.size() == 2) return ProjPoint<F>::affine(parse_element<F>(j[0], field), parse_element<F>(j[1], field));
  ProjPoint<F> p(parse_element<F>(j[0], field), parse_element<F>(j[1], field), parse_element<F>(j[2], field));
  if (!p.at_infinity()) throw SchemaError("finite points must be written as [x, y]");
  return p;
}

AngleElem parse_angle(const json& j) {
  if (!j.is_object() || !j.contains("q") || !j.contains("c") || j.size() != 2) {
    throw SchemaError("angle elements are {\"q\": \"n/d\", \"c\": int}");
  }
  if (!j["c"].is_number_integer()) throw SchemaError("angle coefficient c must be an integer");
  Rational q = parse_rational(need_string(j["q"], "q"));
  if (q < 0 || q >= 1) throw SchemaError("angle q must lie in [0, 1)");
  return AngleElem(q, j["c"].get<std::int64_t>());
}

template <ExactFieldElement F>
ECPoint<F> parse_ec(const json& j, const FieldSpec& field, const WeierstrassCurve<F>& c) {
  ECPoint<F> p;
  if (j.is_string()) {
    if (j.get<std::string>() != "O") throw SchemaError("curve points are {\"x\", \"y\"} or \"O\"");
  } else if (j.is_object() && j.size() == 2 && j.contains("x") && j.contains("y")) {
    p = ECPoint<F>::affine(parse_element<F>(j["x"], field), parse_element<F>(j["y"], field));
  } else {
    throw SchemaError("curve points are {\"x\", \"y\"} or \"O\"");
  }
  if (!on_curve(c, p)) throw SchemaError("point is not on the curve");
  return p;
}

template <class E, class Parse>
std::map<Role, std::vector<E>> parse_sets(const json& sets, Parse parse) {
  if (!sets.is_object()) throw SchemaError("sets must be an object keyed by role");
  std::map<Role, std::vector<E>> out;
  for (const auto& [key, list] : sets.items()) {
    Role role;
    try {
      role = parse_role(key);
    } catch (const UsageError&) {
      throw SchemaError("unknown role '" + key + "'");
    }
    if (!list.is_array()) throw SchemaError("role " + key + " must hold a list");
    auto& dst = out[role];
    for (const auto& e : list) dst.push_back(parse(e));
  }
  return out;
}

template <class E>
void check_roles(const std::map<Role, std::vector<E>>& sets) {
  if (sets.count(Role::P) && (sets.count(Role::B) || sets.count(Role::G))) {
    throw SchemaError("a configuration is either unipartite (P) or bipartite (B, G)");
  }
  if (sets.count(Role::B) != sets.count(Role::G)) throw SchemaError("bipartite configurations need both B and G");
  std::set<E> all;
  for (const auto& [role, list] : sets) {
    std::set<E> mine;
    for (const auto& e : list) {
      if (!mine.insert(e).second) throw SchemaError("repeated element in role " + role_name(role));
      if (!all.insert(e).second) throw SchemaError("roles are not disjoint");
    }
  }
}

template <ExactFieldElement F>
json curve_json(const WeierstrassCurve<F>& c) {
  return {{"weierstrass", {{"a", element_to_string(c.a())}, {"b", element_to_string(c.b())}}}};
}

template <ExactFieldElement F>
WeierstrassCurve<F> parse_curve(const json& j, const FieldSpec& field) {
  if (!j.is_object() || !j.contains("weierstrass")) throw SchemaError("ec documents need curve.weierstrass");
  const auto& w = j["weierstrass"];
  if (!w.is_object() || !w.contains("a") || !w.contains("b")) throw SchemaError("weierstrass needs a and b");
  return WeierstrassCurve<F>(parse_element<F>(w["a"], field), parse_element<F>(w["b"], field));
}

ConfigDocument from_json_unchecked(const json& j) {
  if (!j.is_object()) throw SchemaError("document must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!kTopKeys.count(key)) throw SchemaError("unknown key '" + key + "'");
  }
  for (const char* key : {"version", "representation", "sets"})
    if (!j.contains(key)) throw SchemaError(std::string("missing key '") + key + "'");
  if (!j["version"].is_number_integer() || j["version"].get<int>() != ConfigDocument::kVersion) {
    throw SchemaError("unsupported version");
  }
  const auto rep = parse_representation(need_string(j["representation"], "representation"));
  std::optional<FieldSpec> field;
  if (j.contains("field")) field = FieldSpec::parse(need_string(j["field"], "field"));
  if (rep != Representation::group && !field) throw SchemaError("missing key 'field'");

  struct {
    std::optional<std::string> name;
    std::optional<ConicKind> conic;
    std::optional<Payload> payload;
  } doc;
  if (j.contains("name")) doc.name = need_string(j["name"], "name");
  if (j.contains("group") && rep != Representation::group) throw SchemaError("'group' only applies to group documents");
  if (j.contains("curve") && j["curve"].is_object() && j["curve"].contains("conic")) {
    if (rep != Representation::planar && rep != Representation::angle) {
      throw SchemaError("conic curves apply to planar and angle documents");
    }
    if (j["curve"].size() != 1) throw SchemaError("curve.conic takes no other keys");
    doc.conic = parse_conic_kind(need_string(j["curve"]["conic"], "conic"));
  }
  const json& sets = j["sets"];

  switch (rep) {
    case Representation::planar: {
      if (j.contains("curve") && !doc.conic) throw SchemaError("planar documents only take a conic curve");
      if (doc.conic && field->kind != FieldSpec::Kind::rational) throw SchemaError("conic hosts need the rational field");
      if (field->kind == FieldSpec::Kind::rational) {
        auto s = parse_sets<ProjPoint<Rational>>(sets, [&](const json& e) { return parse_planar<Rational>(e, *field); });
        check_roles(s);
        doc.payload = PointConfig<Rational>(*field, std::move(s));
      } else {
        auto s = parse_sets<ProjPoint<ModP>>(sets, [&](const json& e) { return parse_planar<ModP>(e, *field); });
        check_roles(s);
        doc.payload = PointConfig<ModP>(*field, std::move(s));
      }
      break;
    }
    case Representation::angle: {
      if (field->kind != FieldSpec::Kind::rational) throw SchemaError("angle documents use the rational field");
      if (j.contains("curve") && doc.conic != ConicKind::ellipse) throw SchemaError("angle documents live on an ellipse");
      auto s = parse_sets<AngleElem>(sets, parse_angle);
      AngleConfig cfg;
      for (auto& [role, list] : s) {
        if (role == Role::R) {
          cfg.directions = std::move(list);
        } else {
          cfg.roles[role] = std::move(list);
        }
      }
      cfg.validate();
      doc.payload = std::move(cfg);
      break;
    }
    case Representation::ec: {
      if (!j.contains("curve")) throw SchemaError("ec documents need a curve");
      auto build = [&](auto tag) {
        using F = typename decltype(tag)::type;
        auto c = parse_curve<F>(j["curve"], *field);
        auto s = parse_sets<ECPoint<F>>(sets, [&](const json& e) { return parse_ec<F>(e, *field, c); });
        check_roles(s);
        doc.payload = CurveSets<F>{c, std::move(s)};
      };
      if (field->kind == FieldSpec::Kind::rational) {
        build(std::type_identity<Rational>{});
      } else {
        build(std::type_identity<ModP>{});
      }
      break;
    }
    case Representation::group: {
      if (!j.contains("group") || !j["group"].is_object() || !j["group"].contains("orders") ||
          !j["group"]["orders"].is_array()) {
        throw SchemaError("group documents need group.orders");
      }
      if (j.contains("curve")) throw SchemaError("group documents take no curve");
      FinAbGroup g(j["group"]["orders"].get<std::vector<std::int64_t>>());
      auto s = parse_sets<FinAbGroup::Element>(sets, [&](const json& e) {
        if (!e.is_array()) throw SchemaError("group elements are residue arrays");
        auto v = e.get<std::vector<std::int64_t>>();
        if (!g.contains(v)) throw SchemaError("group element outside the declared group");
        return v;
      });
      check_roles(s);
      doc.payload = FinGroupSets{g, std::move(s)};
      break;
    }
  }
  return ConfigDocument{ConfigDocument::kVersion, doc.name, doc.conic, std::move(*doc.payload)};
}

}  // namespace

json to_json(const ConfigDocument& doc) {
  json j;
  j["version"] = doc.version;
  if (doc.name) j["name"] = *doc.name;
  j["representation"] = representation_name(doc.representation());
  if (doc.representation() != Representation::group) j["field"] = doc.field().to_string();
  if (doc.conic) j["curve"] = {{"conic", conic_kind_name(*doc.conic)}};
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PointConfig<Rational>> || std::is_same_v<T, PointConfig<ModP>>) {
          j["sets"] = encode_sets(p.roles(), [](const auto& e) { return encode(e); });
        } else if constexpr (std::is_same_v<T, AngleConfig>) {
          auto all = p.roles;
          all[Role::R] = p.directions;
          j["sets"] = encode_sets(all, [](const auto& e) { return encode(e); });
        } else if constexpr (std::is_same_v<T, FinGroupSets>) {
          j["group"] = {{"orders", p.group.orders()}};
          j["sets"] = encode_sets(p.sets, [](const auto& e) { return encode(e); });
        } else {
          j["curve"] = curve_json(p.curve);
          j["sets"] = encode_sets(p.sets, [](const auto& e) { return encode(e); });
        }
      },
      doc.payload);
  return j;
}

ConfigDocument document_from_json(const json& j) {
  try {
    return from_json_unchecked(j);
  } catch (const SchemaError&) {
    throw;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed document: ") + e.what());
  } catch (const std::exception& e) {
    throw SchemaError(std::string("invalid document: ") + e.what());
  }
}

std::string dump_document(const ConfigDocument& doc) { return to_json(doc).dump(2) + "\n"; }

ConfigDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  return document_from_json(j);
}

ConfigDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void write_document(const std::string& path, const ConfigDocument& doc) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << dump_document(doc);
  if (!out) throw UsageError("failed writing '" + path + "'");
}

json report_core_json(const ReportCore& r) {
  json j;
  j["bipartite"] = r.bipartite;
  j["pierced"] = r.pierced;
  j["n"] = r.n;
  j["r_size"] = r.r_size;
  j["ratio_gate"] = r.ratio_gate;
  if (!r.bipartite) j["restricted_size"] = r.restricted_size;
  j["sumset_size"] = r.sumset_size;
  j["doubling_constant"] = r.doubling_constant;
  j["lev_applicable"] = r.lev_applicable;
  j["restricted_equals_full"] = r.restricted_equals_full ? json(*r.restricted_equals_full) : json(nullptr);
  j["lemma"] = {{"status", lemma_status_name(r.lemma_status)}, {"detail", r.lemma_detail}};
  j["h_source"] = r.h_source;
  j["h_order"] = r.h_order ? json(*r.h_order) : json(nullptr);
  j["h_size_le_R"] = r.h_size_le_R;
  j["membership_verified"] = r.membership_verified;
  j["full_cosets"] = r.full_cosets ? json(*r.full_cosets) : json(nullptr);
  if (r.bipartite) j["short_argument"] = r.short_argument ? json(*r.short_argument) : json(nullptr);
  j["diagnostics"] = r.diagnostics;
  return j;
}

}  // namespace pierce
