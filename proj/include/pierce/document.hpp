#pragma once

// JSON wire format for configurations. Rationals are always "num/den" strings,
// angle elements {q, c} with c the coefficient of the formal rotation, curve
// points {x, y} or "O", group elements residue arrays.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pierce/abelian.hpp"
#include "pierce/analyzer.hpp"
#include "pierce/conic_line.hpp"
#include "pierce/constructions.hpp"
#include "pierce/cubic.hpp"
#include "pierce/field.hpp"
#include "pierce/plane.hpp"

namespace pierce {

/// Malformed or schema-invalid document.
class SchemaError : public UsageError {
 public:
  using UsageError::UsageError;
};

enum class Representation { planar, angle, ec, group };

std::string representation_name(Representation r);

template <ExactFieldElement F>
struct CurveSets {
  WeierstrassCurve<F> curve;
  std::map<Role, std::vector<ECPoint<F>>> sets;
  friend bool operator==(const CurveSets&, const CurveSets&) = default;
};

struct FinGroupSets {
  FinAbGroup group;
  std::map<Role, std::vector<FinAbGroup::Element>> sets;
  friend bool operator==(const FinGroupSets&, const FinGroupSets&) = default;
};

using Payload = std::variant<PointConfig<Rational>, PointConfig<ModP>, AngleConfig, CurveSets<Rational>,
                             CurveSets<ModP>, FinGroupSets>;

struct ConfigDocument {
  static constexpr int kVersion = 1;

  int version = kVersion;
  std::optional<std::string> name;
  std::optional<ConicKind> conic;  // planar configurations hosted on a conic + line
  Payload payload;

  FieldSpec field() const;
  Representation representation() const;

  friend bool operator==(const ConfigDocument&, const ConfigDocument&) = default;
};

nlohmann::json to_json(const ConfigDocument& doc);
ConfigDocument document_from_json(const nlohmann::json& j);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_document(const ConfigDocument& doc);
ConfigDocument parse_document(const std::string& text);

ConfigDocument read_document(const std::string& path);
void write_document(const std::string& path, const ConfigDocument& doc);

nlohmann::json encode(const Rational& x);
nlohmann::json encode(const ModP& x);
nlohmann::json encode(const AngleElem& e);
nlohmann::json encode(const HalfAngle& h);
nlohmann::json encode(const FinAbGroup::Element& e);

/// ["x","y"] for affine points, ["X","Y","Z"] for points at infinity.
template <ExactFieldElement F>
nlohmann::json encode(const ProjPoint<F>& p) {
  if (p.at_infinity()) {
    return nlohmann::json::array({element_to_string(p.X()), element_to_string(p.Y()), element_to_string(p.Z())});
  }
  auto [x, y] = p.affine_coords();
  return nlohmann::json::array({element_to_string(x), element_to_string(y)});
}

template <ExactFieldElement F>
nlohmann::json encode(const ECPoint<F>& p) {
  if (p.is_identity()) return "O";
  return {{"x", element_to_string(p.x())}, {"y", element_to_string(p.y())}};
}

nlohmann::json report_core_json(const ReportCore& r);

/// Report with H listed explicitly; keys sorted for diffing.
template <AbelianGroup G>
nlohmann::json report_json(const StructureReport<G>& r) {
  auto j = report_core_json(r);
  auto members = [](const SubgroupDescriptor<G>& h) {
    nlohmann::json m = nlohmann::json::array();
    for (const auto& e : h.members) m.push_back(encode(e));
    return m;
  };
  if (r.H) {
    j["H"] = {{"order", r.H->order()}, {"members", members(*r.H)}, {"offset", encode(r.H->offset)}};
    if (r.g_offset) j["H"]["g_offset"] = encode(*r.g_offset);
  } else {
    j["H"] = nullptr;
  }
  if (r.minimal_coset.finite) {
    j["minimal_coset"] = {{"order", r.minimal_coset.order()}, {"offset", encode(r.minimal_coset.offset)}};
  } else {
    j["minimal_coset"] = "infinite";
  }
  return j;
}

}  // namespace pierce
