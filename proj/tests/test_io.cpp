// Copyright 2026 The riskfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include "riskfield/error.hpp"
#include "riskfield/io.hpp"

using doctest::Approx;

TEST_CASE("risk table CSV round trip") {
  const auto table = riskfield::builtin_table();
  const auto parsed = riskfield::parse_table(riskfield::table_to_csv(table));
  CHECK(parsed.nodes == table.nodes);
  CHECK(parsed.concentrations == table.concentrations);
  CHECK(parsed.values == table.values);
}

TEST_CASE("risk table CSV with comments, blanks and quotes") {
  const auto t = riskfield::parse_table(
      "# risk table\n\n concentration , 1,2,3,4,5\r\n\"0.27\",0,0.804,0.342,0.204,0.388\n"
      "2.43,0,7.237,3.077,1.834,3.49\n");
  CHECK(t.values.size() == 2);
  CHECK(t.values[1][4] == 3.49);
}

TEST_CASE("risk table JSON") {
  const auto t = riskfield::parse_table(
      R"({"concentrations":[0.27,2.43],"nodes":[1,2,3,4,5],"values":[[0,1,2,3,4],[0,2,4,6,8]]})");
  CHECK(t.concentrations.size() == 2);
  CHECK(t.values[1][2] == 4.0);
  CHECK_THROWS_AS(riskfield::parse_table(R"({"nodes":[1]})"), riskfield::ParseError);
  CHECK_THROWS_AS(riskfield::parse_table("{not json"), riskfield::ParseError);
}

TEST_CASE("malformed tables report row and column") {
  CHECK_THROWS_AS(riskfield::parse_table(""), riskfield::ParseError);
  CHECK_THROWS_AS(riskfield::parse_table("  \n# only a comment\n"), riskfield::ParseError);
  try {
    riskfield::parse_table("c,1,2,3,4,5\n0.27,0,1,x,3,4\n");
    FAIL("expected a parse error");
  } catch (const riskfield::ParseError& e) {
    CHECK(e.row() == 2);
    CHECK(e.column() == 4);
    CHECK(std::string(e.what()).find("row 2, column 4") == 0);
  }
  try {
    riskfield::parse_table("c,1,2,3,4,5\n0.27,0,1,2\n");
    FAIL("expected a parse error");
  } catch (const riskfield::ParseError& e) {
    CHECK(e.row() == 2);
  }
  CHECK_THROWS_AS(riskfield::parse_table("c,1,2,3,4,5\n"), riskfield::ParseError);
}

TEST_CASE("field JSON round trip") {
  const auto f = riskfield::builtin_field();
  const auto j = riskfield::field_to_json(f);
  CHECK(j["a"][0] == -19.48);
  CHECK(j["domain"]["c"][1] == 3.5);
  const auto back = riskfield::field_from_json(j);
  CHECK(back(2.5, 1.5) == f(2.5, 1.5));
  CHECK(riskfield::looks_like_field_json(j.dump()));
  CHECK_FALSE(riskfield::looks_like_field_json("c,1,2\n"));
  CHECK_FALSE(riskfield::looks_like_field_json(R"({"nodes":[1]})"));
  CHECK_THROWS_AS(riskfield::field_from_json(riskfield::json::parse(R"({"a":[1]})")),
                  riskfield::ParseError);
}

namespace {
const char* kHeader =
    "group,age_min,age_max,body_weight_kg,intake_g_per_month,portions_per_month,"
    "concentration_mg_per_kg,rfd,substitution_fraction\n";
}

TEST_CASE("profile CSV parsing and validation") {
  const auto ok = riskfield::parse_profiles(std::string(kHeader) +
                                            "Men,12,60,73.44,262.6,2.6,0.27,0.0001,0.6037\n");
  REQUIRE(ok.size() == 1);
  CHECK(ok[0].group == "Men");
  CHECK(ok[0].days_per_week == 7.0);

  try {
    riskfield::parse_profiles(std::string(kHeader) +
                              "Men,12,60,-1,262.6,2.6,0.27,0.0001,0.6037\n"
                              "Boys,6,12,34.94,188.17,1.3,0.27,0.0001,1.5\n");
    FAIL("expected a validation error");
  } catch (const riskfield::ValidationError& e) {
    REQUIRE(e.problems().size() == 2);
    CHECK(e.problems()[0].find("row 2") != std::string::npos);
    CHECK(e.problems()[0].find("body_weight_kg") != std::string::npos);
    CHECK(e.problems()[1].find("row 3") != std::string::npos);
    CHECK(e.problems()[1].find("substitution_fraction") != std::string::npos);
  }
  CHECK_THROWS_AS(riskfield::parse_profiles("group,age_min\nMen,1\n"), riskfield::ParseError);
  CHECK_THROWS_AS(riskfield::parse_profiles(std::string(kHeader) + "Men,12,60\n"),
                  riskfield::ParseError);
  CHECK_THROWS_AS(riskfield::parse_profiles(std::string(kHeader) +
                                            "Men,12,60,abc,262.6,2.6,0.27,0.0001,0.6037\n"),
                  riskfield::ParseError);
}

TEST_CASE("profile JSON") {
  const auto p = riskfield::parse_profiles(
      R"([{"group":"Men","age_min":12,"age_max":60,"body_weight_kg":73.44,
           "intake_g_per_month":262.6,"portions_per_month":2.6,
           "concentration_mg_per_kg":0.27,"rfd":0.0001,"substitution_fraction":0.6037,
           "exposure_years":48}])");
  REQUIRE(p.size() == 1);
  CHECK(p[0].exposure_years == 48.0);
  CHECK_THROWS_AS(riskfield::parse_profiles(R"([{"group":"Men"}])"), riskfield::ParseError);
  CHECK_THROWS_AS(riskfield::parse_profiles(R"([{"group":"Men","bogus":1}])"),
                  riskfield::ParseError);
}

TEST_CASE("built-in profiles land near the tabulated risk coefficients") {
  const auto profiles = riskfield::builtin_profiles();
  REQUIRE(profiles.size() == 12);
  const double table4_027[] = {0.804, 0.342, 0.204, 0.388};
  for (int g = 0; g < 4; ++g) {
    const auto a = riskfield::assess(profiles[g]);
    CHECK(a.concentration_mg_per_kg == 0.27);
    CHECK(std::fabs(a.verdict.risk_coefficient - table4_027[g]) < 0.1);
    CHECK(a.verdict.acceptable);
  }
  // Babies and men are the two single-profile examples with a tighter band.
  CHECK(std::fabs(riskfield::assess(profiles[0]).verdict.risk_coefficient - 0.804) < 0.05);
  CHECK(std::fabs(riskfield::assess(profiles[2]).verdict.risk_coefficient - 0.204) < 0.05);
  // Coefficients scale linearly with concentration.
  for (int g = 0; g < 4; ++g) {
    const double r027 = riskfield::assess(profiles[g]).verdict.risk_coefficient;
    const double r333 = riskfield::assess(profiles[8 + g]).verdict.risk_coefficient;
    CHECK(r333 / r027 == Approx(3.33 / 0.27));
    CHECK_FALSE(riskfield::assess(profiles[8 + g]).verdict.acceptable);
  }
}

TEST_CASE("assessment arithmetic") {
  riskfield::SurveyProfile p = riskfield::builtin_profiles()[2];  // men, 0.27 mg/kg
  const auto a = riskfield::assess(p);
  CHECK(a.intake_kg_per_day == Approx(0.2626 / 30.44 * 0.6037));
  CHECK(a.exposure_factor == Approx(7 * 52.0 / 365.0));
  CHECK(a.limit_kg_per_day == Approx(1e-4 * 73.44 / 0.27));
  CHECK(a.limit_meals_per_month == Approx(a.limit_kg_per_day * 30.44 / (0.2626 / 2.6)));
  p.substitution_fraction = 0.0;
  CHECK(riskfield::assess(p).verdict.risk_coefficient == 0.0);
}

TEST_CASE("shipped data files match the built-in datasets") {
  const std::string dir = RISKFIELD_DATA_DIR;
  const auto table = riskfield::parse_table(riskfield::read_file(dir + "/builtin_table.csv"));
  CHECK(table.values == riskfield::builtin_table().values);
  const auto profiles = riskfield::parse_profiles(riskfield::read_file(dir + "/builtin_profiles.csv"));
  const auto builtin = riskfield::builtin_profiles();
  REQUIRE(profiles.size() == builtin.size());
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    CHECK(riskfield::assess(profiles[i]).verdict.risk_coefficient ==
          Approx(riskfield::assess(builtin[i]).verdict.risk_coefficient));
  }
}

TEST_CASE("missing files") {
  CHECK_THROWS(riskfield::read_file("/nonexistent/path/table.csv"));
}
