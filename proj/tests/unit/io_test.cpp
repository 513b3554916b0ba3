// Copyright 2026 The mcdm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "fixtures.hpp"
#include "mcdm/io.hpp"
#include "mcdm/methods.hpp"
#include "printed_tables.hpp"

namespace mcdm {
namespace {

using nlohmann::json;
using testing::read_fixture;
using testing::table71_problem;

CriteriaConfig table71_config() {
  return {{Direction::Maximize, Direction::Minimize, Direction::Maximize}, {0.25, 0.4, 0.35}, {}, false};
}

ErrorCode first_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::DegenerateProblem;
}

TEST(Csv, ReferenceFixture) {
  const auto p = parse_csv(read_fixture("table71.csv"), table71_config());
  EXPECT_EQ(p, table71_problem());
}

TEST(Csv, CrlfBomAndSpaces) {
  const std::string text = "\xEF\xBB\xBFname, C1 ,C2\r\nA, 1.5 , 2\r\nB,3,4e0\r\n\r\n";
  CriteriaConfig config{{Direction::Maximize, Direction::Minimize}, {0.5, 0.5}, {}, false};
  const auto p = parse_csv(text, config);
  EXPECT_EQ(p.criteria[0].name, "C1");
  EXPECT_EQ(p.alternatives, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(p.values[1][1], 4.0);
}

TEST(Csv, EmptyDataSection) {
  try {
    parse_csv("alt,C1,C2,C3\n", table71_config());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooFewAlternatives);
    EXPECT_NE(std::string(e.what()).find("m >= 2 required"), std::string::npos);
  }
}

TEST(Csv, LocaleCommaIsRejectedAtTheCell) {
  const std::string text = "alt,C1,C2,C3\nA1,0.185,\"2,33\",454\nA2,0.317,1.08,298\n";
  try {
    parse_csv(text, table71_config());
    FAIL();
  } catch (const Error& e) {
    ASSERT_EQ(e.issues().size(), 1u);
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_EQ(e.issues()[0].location.row, 2u);
    EXPECT_EQ(e.issues()[0].location.column, 3u);
  }
  // Unquoted, the comma splits the cell and the row gets too wide.
  const std::string bare = "alt,C1,C2,C3\nA1,0.185,2,33,454\nA2,0.317,1.08,298\n";
  EXPECT_EQ(first_code([&] { parse_csv(bare, table71_config()); }), ErrorCode::ParseError);
}

TEST(Csv, RejectsNonNumericTokens) {
  for (const char* bad : {"inf", "nan", "0x10", "1.2.3", "", "12abc"}) {
    const std::string text = std::string("alt,C1\nA,") + bad + "\nB,1\n";
    CriteriaConfig config{{Direction::Maximize}, {1.0}, {}, false};
    EXPECT_EQ(first_code([&] { parse_csv(text, config); }), ErrorCode::ParseError) << bad;
  }
}

TEST(Csv, CountMismatch) {
  auto config = table71_config();
  config.weights.pop_back();
  EXPECT_EQ(first_code([&] { parse_csv(read_fixture("table71.csv"), config); }),
            ErrorCode::CountMismatch);
  config = table71_config();
  config.directions.push_back(Direction::Maximize);
  EXPECT_EQ(first_code([&] { parse_csv(read_fixture("table71.csv"), config); }),
            ErrorCode::CountMismatch);
}

TEST(Csv, NormalizeWeightsFlag) {
  auto config = table71_config();
  config.weights = {25, 40, 35};
  EXPECT_EQ(first_code([&] { parse_csv(read_fixture("table71.csv"), config); }),
            ErrorCode::WeightOutOfRange);
  config.normalize_weights = true;
  const auto p = parse_csv(read_fixture("table71.csv"), config);
  EXPECT_NEAR(p.criteria[1].weight, 0.4, 1e-15);
}

TEST(Sidecar, CriteriaListAndNameCheck) {
  auto config = parse_sidecar(read_fixture("table71.criteria.json"));
  EXPECT_EQ(config.names, (std::vector<std::string>{"C1", "C2", "C3"}));
  EXPECT_EQ(parse_csv(read_fixture("table71.csv"), config), table71_problem());
  config.names[1] = "cost";
  EXPECT_EQ(first_code([&] { parse_csv(read_fixture("table71.csv"), config); }),
            ErrorCode::SchemaViolation);
  const auto flat = parse_sidecar(R"({"directions": ["max", "min"], "weights": [0.5, 0.5]})");
  EXPECT_EQ(flat.weights.size(), 2u);
  EXPECT_TRUE(flat.names.empty());
}

TEST(Json, FixtureMatchesCsvRoute) {
  const auto doc = parse_json(read_fixture("table71.json"));
  EXPECT_EQ(doc.problem, parse_csv(read_fixture("table71.csv"), table71_config()));
  EXPECT_EQ(doc.methods.size(), 9u);
  EXPECT_EQ(doc.params, MethodParams{});
}

TEST(Json, WeightSumInvalid) {
  json doc = json::parse(read_fixture("table71.json"));
  for (auto& c : doc["criteria"]) c["weight"] = 0.5;
  try {
    document_from_json(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WeightSumInvalid);
  }
  EXPECT_NO_THROW(document_from_json(doc, true));
}

TEST(Json, UnknownMethodListsValidIds) {
  json doc = json::parse(read_fixture("table71.json"));
  doc["methods"] = {"topsis", "topsis2"};
  try {
    document_from_json(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownMethod);
    EXPECT_EQ(e.issues()[0].location.pointer, "/methods/1");
    const std::string msg = e.issues()[0].message;
    for (Method m : kAllMethods) EXPECT_NE(msg.find(method_id(m)), std::string::npos);
  }
}

TEST(Json, SchemaViolationsCarryPointers) {
  json doc = json::parse(read_fixture("table71.json"));
  doc["criteria"][1]["direction"] = "down";
  doc["values"][2][0] = "0.555";
  doc["params"] = {{"gamma", "half"}, {"beta", 1}};
  try {
    document_from_json(doc);
    FAIL();
  } catch (const Error& e) {
    std::vector<std::string> pointers;
    for (const auto& i : e.issues()) {
      EXPECT_EQ(i.code, ErrorCode::SchemaViolation);
      pointers.push_back(i.location.pointer);
    }
    EXPECT_EQ(pointers, (std::vector<std::string>{"/criteria/1/direction", "/values/2/0",
                                                  "/params/beta", "/params/gamma"}));
  }
  EXPECT_EQ(first_code([] { parse_json("[1, 2]"); }), ErrorCode::SchemaViolation);
  EXPECT_EQ(first_code([] { parse_json("{\"alternatives\": "); }), ErrorCode::ParseError);
  EXPECT_EQ(first_code([] { parse_json("{}"); }), ErrorCode::SchemaViolation);
}

TEST(Json, ParamsAndMethodSelection) {
  json doc = json::parse(read_fixture("table71.json"));
  doc["methods"] = {"vikor", "gra", "vikor"};
  doc["params"] = {{"gamma", 0.25}, {"zeta", 0.7}, {"tau", 0.03}, {"gra_variant", "weighted"}};
  const auto parsed = document_from_json(doc);
  EXPECT_EQ(parsed.methods, (std::vector<Method>{Method::Vikor, Method::Gra}));
  EXPECT_EQ(parsed.params.vikor_gamma, 0.25);
  EXPECT_EQ(parsed.params.gra_variant, GraVariant::Weighted);
  doc["params"]["tau"] = 0.5;
  EXPECT_EQ(first_code([&] { document_from_json(doc); }), ErrorCode::InvalidParameter);
}

TEST(Json, DocumentRoundTrip) {
  const auto doc = parse_json(read_fixture("e73.json"));
  const auto again = parse_json(dump_json(to_json(doc)));
  EXPECT_EQ(again.problem, doc.problem);
  EXPECT_EQ(again.methods, doc.methods);
  EXPECT_EQ(again.params, doc.params);
}

TEST(Dump, SeventeenSignificantDigits) {
  EXPECT_EQ(dump_json(json(0.1)), "0.10000000000000001");
  EXPECT_EQ(dump_json(json(0.25)), "0.25");
  EXPECT_EQ(dump_json(json(454.0)), "454");
  EXPECT_EQ(dump_json(json(-0.0)), "-0.0");
  EXPECT_EQ(dump_json(json(std::numeric_limits<double>::infinity())), "null");
  EXPECT_EQ(dump_json(json::array({1.5, 2.0})), "[1.5, 2]");
  EXPECT_EQ(dump_json(json{{"b", 1}, {"a", "x\"y"}}, -1), R"({"a":"x\"y","b":1})");
}

TEST(Dump, EveryDoubleRoundTripsExactly) {
  const auto result = probid(table71_problem());
  const std::string text = dump_json(rank_document(table71_problem(), {result}));
  const json back = json::parse(text);
  const auto scores = back["probid"]["scores"].get<std::vector<double>>();
  EXPECT_EQ(scores, result.scores);
  EXPECT_EQ(dump_json(back), text);
}

TEST(Results, VikorCompromiseSetIsLifted) {
  const auto j = to_json(vikor(table71_problem()));
  EXPECT_EQ(j["compromise_set"], json({"A1", "A2", "A5"}));
  EXPECT_FALSE(j["diagnostics"].contains("compromise_set"));
  EXPECT_EQ(j["diagnostics"]["acceptable_advantage"], false);
  EXPECT_EQ(j["orientation"], "lower_better");
}

TEST(Results, RankDocumentLayout) {
  const auto p = table71_problem();
  const auto j = rank_document(p, {topsis(p), piv(p)});
  EXPECT_EQ(j["alternatives"].size(), 5u);
  EXPECT_EQ(j["topsis"]["ranking"], json({"A2", "A1", "A4", "A5", "A3"}));
  EXPECT_EQ(j["piv"]["ranks"], json({4, 2, 5, 1, 3}));
  EXPECT_EQ(j["topsis"]["diagnostics"]["weighted"].size(), 5u);
}

TEST(Results, IssueJson) {
  const Issue issue{ErrorCode::NonFinite, {.row = 2, .column = 3, .pointer = {}}, "bad"};
  EXPECT_EQ(dump_json(to_json(issue), -1),
            R"({"code":"NonFinite","location":{"column":3,"row":2},"message":"bad"})");
  EXPECT_EQ(errors_to_json({issue})["errors"].size(), 1u);
}

TEST(Tables, FourDecimals) {
  const auto p = table71_problem();
  const auto text = format_rank_table(p, {topsis(p), vikor(p)});
  EXPECT_NE(text.find("0.5305"), std::string::npos);
  EXPECT_NE(text.find("ranking: A2 A1 A4 A5 A3"), std::string::npos);
  EXPECT_NE(text.find("compromise set: A1 A2 A5"), std::string::npos);
  EXPECT_EQ(text.find("-0.0000"), std::string::npos);
}

TEST(Lists, Parsing) {
  EXPECT_EQ(parse_direction_list("max, min"),
            (std::vector<Direction>{Direction::Maximize, Direction::Minimize}));
  EXPECT_EQ(parse_number_list("0.25,0.4", "weight"), (std::vector<double>{0.25, 0.4}));
  EXPECT_EQ(parse_method_list("all").size(), 9u);
  EXPECT_EQ(parse_method_list("piv,codas"), (std::vector<Method>{Method::Piv, Method::Codas}));
  EXPECT_EQ(first_code([] { parse_method_list("piv,foo"); }), ErrorCode::UnknownMethod);
  EXPECT_EQ(first_code([] { parse_direction_list("up"); }), ErrorCode::ParseError);
  EXPECT_EQ(parse_decimal("+1.5"), 1.5);
  EXPECT_FALSE(parse_decimal("1,5"));
}

}  // namespace
}  // namespace mcdm
