#include <gtest/gtest.h>

#include "orbital/io.hpp"

using namespace orbital;
using orbital::json::Json;

namespace {

errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  return errc::not_applicable;
}

}  // namespace

TEST(Json, TableauRoundTrip) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : all_standard_tableaux(n)) {
      Json j = json::encode(t);
      EXPECT_EQ(j.at("n"), n);
      EXPECT_EQ(json::decode_tableau(json::parse(j.dump())), t);
    }
}

TEST(Json, TableauInputForms) {
  auto t = validate_syt({{1, 3}, {2}});
  EXPECT_EQ(json::decode_tableau(json::parse("[[1,3],[2]]")), t);
  EXPECT_EQ(json::decode_tableau(json::parse(R"({"schema":"orbital/v1","rows":[[1,3],[2]]})")), t);
  EXPECT_EQ(code_of([] { json::decode_tableau(json::parse(R"({"n":4,"rows":[[1,3],[2]]})")); }), errc::bad_json);
  EXPECT_EQ(code_of([] { json::decode_tableau(json::parse(R"({"schema":"orbital/v9","rows":[[1]]})")); }),
            errc::bad_json);
  EXPECT_EQ(code_of([] { json::decode_tableau(json::parse(R"({"rows":[["a"]]})")); }), errc::bad_json);
  EXPECT_EQ(code_of([] { json::decode_tableau(json::parse(R"({"cells":[[1]]})")); }), errc::bad_json);
  EXPECT_EQ(code_of([] { json::parse("[[1,2"); }), errc::bad_json);
  EXPECT_EQ(code_of([] { json::decode_tableau(json::parse("[[2,1]]")); }), errc::row_not_increasing);
}

TEST(Json, PolynomialRoundTrip) {
  MultiPoly t = MultiPoly::t();
  MultiPoly p = MultiPoly::x(4, 11) * MultiPoly::x(1, 2) * t * t - MultiPoly(Integer("123456789012345678901234567890")) +
                MultiPoly::x(1, 3);
  Json j = json::encode(p);
  EXPECT_EQ(json::decode_poly(json::parse(j.dump())), p);
  EXPECT_EQ(j[0].at("exps").at("4,11"), 1);
  EXPECT_EQ(j[0].at("exps").at("t"), 2);
  EXPECT_EQ(j.back().at("coeff"), "-123456789012345678901234567890");
  EXPECT_EQ(json::encode(MultiPoly()), Json::array());
}

TEST(Json, PolynomialRejectsMalformedTerms) {
  EXPECT_EQ(code_of([] { json::decode_poly(json::parse(R"([{"coeff":"1","exps":{"2,1":1}}])")); }), errc::bad_json);
  EXPECT_EQ(code_of([] { json::decode_poly(json::parse(R"([{"coeff":"x","exps":{}}])")); }), errc::bad_json);
  EXPECT_EQ(code_of([] { json::decode_poly(json::parse(R"([{"coeff":"1","exps":{"1;2":1}}])")); }), errc::bad_json);
  EXPECT_EQ(code_of([] { json::decode_poly(json::parse(R"({"coeff":"1"})")); }), errc::bad_json);
}

TEST(Json, DescriptorRoundTrip) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& d : all_hypersurface_descriptors(n)) {
      Json j = json::encode(d);
      EXPECT_EQ(j.at("window"), Json::array({d.sigma_lo, d.dropped_box}));
      EXPECT_EQ(json::decode_descriptor(json::parse(j.dump())), d);
    }
}

TEST(Json, DescriptorRejectsTampering) {
  auto d = *classify_hypersurface(validate_syt({{1, 2, 4}, {3, 5, 6}}));
  Json j = json::encode(d);
  j["thickness"] = 2;
  EXPECT_EQ(code_of([&] { json::decode_descriptor(j); }), errc::bad_json);
}

TEST(Json, VerificationReportRoundTrip) {
  VerificationReport r{"N=6 tau={2,4} drop=6", 10, 10, 9, 8, 10, {{"jordan", 3, 2147483647, "Jordan type (4,2) != (3,3)"}}};
  auto back = json::decode_verification(json::parse(json::encode(r).dump()));
  EXPECT_EQ(json::encode(back), json::encode(r));
  Json bad = json::encode(r);
  bad["jordan_match"] = 11;
  EXPECT_EQ(code_of([&] { json::decode_verification(bad); }), errc::bad_json);
}

TEST(Json, SmallValueTypes) {
  EXPECT_EQ(json::decode_partition(json::encode(Partition({3, 1}))), Partition({3, 1}));
  EXPECT_EQ(json::decode_tau(json::encode(TauSet(5, {4, 1})), 5), TauSet(5, {1, 4}));
  EXPECT_EQ(json::decode_permutation(json::encode(Permutation({2, 3, 1}))), Permutation({2, 3, 1}));
  EXPECT_EQ(json::decode_weight(json::encode(WeightVector({1, 0, 2}))), WeightVector({1, 0, 2}));
  EXPECT_EQ(code_of([] { json::decode_permutation(Json::array({1, 1})); }), errc::bad_permutation);
}

TEST(Json, DocumentCarriesSchema) {
  Json d = json::document("x", Json{{"a", 1}});
  EXPECT_EQ(d.at("schema"), "orbital/v1");
  EXPECT_EQ(d.at("kind"), "x");
  EXPECT_EQ(d.at("a"), 1);
}
