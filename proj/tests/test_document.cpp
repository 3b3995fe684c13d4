#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "helpers.hpp"
#include "pierce/document.hpp"

namespace pierce {
namespace {

using nlohmann::json;

ConfigDocument doc_of(Payload p, std::optional<ConicKind> conic = std::nullopt) {
  return ConfigDocument{ConfigDocument::kVersion, std::string("t"), conic, std::move(p)};
}

void round_trip(const ConfigDocument& d) {
  auto text = dump_document(d);
  auto back = parse_document(text);
  EXPECT_EQ(back, d);
  EXPECT_EQ(dump_document(back), text);
}

TEST(Document, RoundTripsEveryRepresentation) {
  round_trip(doc_of(complete_quadrilateral()));
  round_trip(doc_of(three_line_bipartite()));
  round_trip(doc_of(complete_quadrilateral(), ConicKind::ellipse));
  round_trip(doc_of(rotated_union(4)));
  round_trip(doc_of(bipartite_construction(3)));
  WeierstrassCurve<ModP> c(ModP(7, 0), ModP(7, 1));
  auto pts = enumerate_points(c);
  round_trip(doc_of(CurveSets<ModP>{c, {{Role::P, {pts[1], pts[2]}}, {Role::R, {pts[0]}}}}));
  WeierstrassCurve<Rational> cq(test::q(0), test::q(1));
  round_trip(doc_of(CurveSets<Rational>{cq, {{Role::P, {ECPoint<Rational>::affine(test::q(2), test::q(3))}}}}));
  auto g = FinAbGroup({2, 6});
  round_trip(doc_of(FinGroupSets{g, {{Role::P, {{0, 1}, {1, 3}}}, {Role::R, {{1, 4}}}}}));
  round_trip(doc_of(PointConfig<ModP>(FieldSpec::prime(5), {{Role::P, {test::fp(5, 1, 2), test::fp(5, 1, 1, 0)}}})));
}

TEST(Document, RepresentationAndField) {
  auto d = doc_of(rotated_union(3));
  EXPECT_EQ(d.representation(), Representation::angle);
  auto j = to_json(doc_of(FinGroupSets{FinAbGroup::cyclic(4), {{Role::P, {{1}}}}}));
  EXPECT_FALSE(j.contains("field"));
  EXPECT_EQ(j["representation"], "group");
  EXPECT_EQ(to_json(doc_of(complete_quadrilateral()))["field"], "rational");
}

TEST(Document, PointEncodings) {
  EXPECT_EQ(encode(test::pt(1, 2)), json::array({"1/1", "2/1"}));
  EXPECT_EQ(encode(test::inf(2, 1)), json::array({"1/1", "1/2", "0/1"}));
  EXPECT_EQ(encode(ECPoint<ModP>::identity()), "O");
  EXPECT_EQ(encode(AngleElem::of(1, 3, -1)), (json{{"q", "1/3"}, {"c", -1}}));
}

json planar(json sets) {
  return {{"version", 1}, {"field", "rational"}, {"representation", "planar"}, {"sets", std::move(sets)}};
}

TEST(Document, SchemaErrors) {
  auto ok = planar({{"P", {{"0", "0"}, {"1", "0"}}}});
  ok["sets"]["P"] = json::array({json::array({"0", "0"}), json::array({"1", "0"})});
  EXPECT_NO_THROW(document_from_json(ok));

  std::vector<json> bad;
  auto v = ok;
  v["version"] = 2;
  bad.push_back(v);
  v = ok;
  v["extra"] = 1;
  bad.push_back(v);
  v = ok;
  v.erase("sets");
  bad.push_back(v);
  v = ok;
  v["representation"] = "sphere";
  bad.push_back(v);
  v = ok;
  v["field"] = "fp:6";
  bad.push_back(v);
  v = ok;
  v["sets"]["P"][0] = json::array({"1/0", "0"});
  bad.push_back(v);
  v = ok;
  v["sets"]["P"][1] = json::array({"0", "0"});  // repeated point
  bad.push_back(v);
  v = ok;
  v["sets"]["Q"] = json::array();
  bad.push_back(v);
  v = ok;
  v["sets"]["B"] = json::array({json::array({"5", "5"})});  // B without G, next to P
  bad.push_back(v);
  v = ok;
  v["sets"]["P"][0] = json::array({"0", "0", "0"});
  bad.push_back(v);
  v = ok;
  v["group"] = {{"orders", {3}}};
  bad.push_back(v);
  for (const auto& b : bad) EXPECT_THROW(document_from_json(b), SchemaError) << b.dump();
  EXPECT_THROW(parse_document("{not json"), SchemaError);
  EXPECT_THROW(parse_document("[]"), SchemaError);
}

TEST(Document, CurveSchemaErrors) {
  json ec = {{"version", 1},
             {"field", "fp:7"},
             {"representation", "ec"},
             {"curve", {{"weierstrass", {{"a", "0"}, {"b", "1"}}}}},
             {"sets", {{"P", json::array({json{{"x", "0"}, {"y", "1"}}, "O"})}}}};
  EXPECT_NO_THROW(document_from_json(ec));
  auto off = ec;
  off["sets"]["P"][0]["y"] = "2";
  EXPECT_THROW(document_from_json(off), SchemaError);
  auto singular = ec;
  singular["curve"]["weierstrass"]["b"] = "0";
  singular["curve"]["weierstrass"]["a"] = "0";
  EXPECT_THROW(document_from_json(singular), SchemaError);
  auto nocurve = ec;
  nocurve.erase("curve");
  EXPECT_THROW(document_from_json(nocurve), SchemaError);
}

TEST(Document, GroupSchemaErrors) {
  json g = {{"version", 1}, {"representation", "group"}, {"group", {{"orders", {2, 4}}}},
            {"sets", {{"P", json::array({json::array({1, 3})})}}}};
  EXPECT_NO_THROW(document_from_json(g));
  auto out = g;
  out["sets"]["P"][0] = json::array({2, 0});
  EXPECT_THROW(document_from_json(out), SchemaError);
  auto nog = g;
  nog.erase("group");
  EXPECT_THROW(document_from_json(nog), SchemaError);
}

TEST(Document, UnpiercedAngleDocumentStillLoads) {
  json a = {{"version", 1}, {"field", "rational"}, {"representation", "angle"},
            {"sets", {{"P", json::array({json{{"q", "0"}, {"c", 0}}, json{{"q", "1/3"}, {"c", 0}}})},
                      {"R", json::array()}}}};
  auto d = document_from_json(a);
  EXPECT_FALSE(std::get<AngleConfig>(d.payload).missing_directions().empty());
}

TEST(Document, FileRoundTrip) {
  auto path = std::filesystem::temp_directory_path() / "pierce_doc_test.json";
  auto d = doc_of(rotated_union(3));
  write_document(path.string(), d);
  EXPECT_EQ(read_document(path.string()), d);
  std::filesystem::remove(path);
  EXPECT_THROW(read_document(path.string()), UsageError);
}

}  // namespace
}  // namespace pierce
