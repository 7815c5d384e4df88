#include <gtest/gtest.h>

#include <sstream>

#include "liaison/error.hpp"
#include "liaison/eta_theta.hpp"
#include "liaison/io.hpp"
#include "liaison/presets.hpp"

using namespace liaison;

TEST(SpecJson, ParsesTwistsInAnyOrder) {
  const auto raw = parse_spec_json(R"({"name": "n", "g": {"rank": 2, "a": 5},
      "e_twists": [0, 3, -5, -1, -4, 0, -4], "f_twists": [-3, 1, 5, 4, 4, 1]})");
  EXPECT_EQ(validate_resolution(raw), spec_preset("explicitA"));
  EXPECT_EQ(raw.name, "n");
}

TEST(SpecJson, RoundTrip) {
  for (const auto& p : spec_presets()) {
    const auto spec = validate_resolution(p.raw());
    const auto again = validate_resolution(parse_spec_json(spec_to_json(spec)));
    EXPECT_EQ(again, spec) << p.name;
    EXPECT_EQ(again.name(), spec.name());
  }
}

TEST(SpecJson, StrictTypes) {
  EXPECT_THROW(parse_spec_json("[]"), Error);
  EXPECT_THROW(parse_spec_json("{"), Error);
  EXPECT_THROW(parse_spec_json(R"({"name": "n", "g": {"rank": 2, "a": 5}, "e_twists": [0]})"), Error);
  EXPECT_THROW(parse_spec_json(R"({"name": "n", "g": {"rank": 2.5, "a": 5}, "e_twists": [0], "f_twists": []})"),
               Error);
  EXPECT_THROW(parse_spec_json(R"({"name": "n", "g": {"rank": 2, "a": 5}, "e_twists": ["0"], "f_twists": []})"),
               Error);
  EXPECT_THROW(parse_spec_json(R"({"name": 3, "g": {"rank": 2, "a": 5}, "e_twists": [0], "f_twists": []})"),
               Error);
  try {
    parse_spec_json("{");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
  }
}

TEST(SpecJson, MissingFileIsIoError) {
  try {
    read_spec_file("/nonexistent/spec.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Io);
  }
}

TEST(Csv, EtaThetaRows) {
  const auto spec = spec_preset("alpha-fail");
  const auto e = eta(spec);
  const auto t = theta(e, spec.a_plus_h());
  std::ostringstream out;
  write_eta_theta_csv(out, e, t);
  const std::string csv = out.str();
  EXPECT_EQ(csv.rfind("l,eta,theta\n", 0), 0U);
  EXPECT_NE(csv.find("\n7,2,1\n"), std::string::npos);
  EXPECT_NE(csv.find("\n8,1,0\n"), std::string::npos);
  EXPECT_NE(csv.find("\n9,2,2\n"), std::string::npos);
}

TEST(Presets, AllValidate) {
  EXPECT_NO_THROW(validate_presets());
  EXPECT_EQ(find_spec_preset("explicitB"), find_spec_preset("explicitA"));
  EXPECT_EQ(find_spec_preset("nope"), nullptr);
  EXPECT_THROW(spec_preset("nope"), Error);
  EXPECT_THROW(matrix_preset("nope", 3), Error);
  for (const auto& p : spec_presets()) EXPECT_FALSE(p.description.empty());
}
