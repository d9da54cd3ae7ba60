#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cvec/errors.hpp"
#include "cvec/fixtures.hpp"
#include "cvec/io.hpp"
#include "helpers.hpp"

using namespace cvec;
using namespace testing_helpers;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(RoundTrip, MatrixFilesAreBitExact) {
  for (const auto& name : matrix_fixture_names()) {
    const std::string path = data_path("matrices/" + name + ".json");
    MatrixFile m = matrix_file_from_json(read_json_file(path));
    EXPECT_EQ(m.rows, fixture_matrix(name)) << name;
    EXPECT_EQ(to_json(m).dump(2) + "\n", slurp(path)) << name;
  }
}

TEST(RoundTrip, AlgebraFilesAreBitExact) {
  for (const auto& name : algebra_fixture_names()) {
    const std::string path = data_path("algebras/" + name + ".json");
    AlgebraPresentation p = algebra_from_json(read_json_file(path));
    EXPECT_EQ(p, fixture_algebra(name)) << name;
    EXPECT_EQ(to_json(p).dump(2) + "\n", slurp(path)) << name;
  }
}

TEST(RoundTrip, ModuleFilesAreBitExact) {
  for (const std::string name : {"a2", "a3", "nakayama3"}) {
    AlgebraPtr alg = Algebra::create(fixture_algebra(name));
    std::size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(data_path("modules/" + name))) {
      const std::string path = entry.path().string();
      Representation m = module_from_json(alg, read_json_file(path));
      EXPECT_EQ(to_json(m).dump(2) + "\n", slurp(path)) << path;
      ++seen;
    }
    EXPECT_EQ(seen, fixture_modules(alg, name).size()) << name;
  }
}

TEST(ParseJson, ReportsLineAndColumn) {
  const std::string msg = message_of([] { parse_json("{\n  \"n\": 2,\n  oops\n}", "m.json"); });
  EXPECT_EQ(msg.rfind("m.json:3:", 0), 0u) << msg;
  EXPECT_NE(message_of([] { read_json_file("/nonexistent/x.json"); }).find("cannot open"), std::string::npos);
}

TEST(ParseJson, FieldErrorsNameTheField) {
  EXPECT_NE(message_of([] { matrix_file_from_json(Json{{"rows", Json::array()}}); }).find("matrix.n"), std::string::npos);
  EXPECT_NE(message_of([] { matrix_file_from_json(parse_json(R"({"n":2,"rows":[[0,1],[1,0]]})")); }).find("skew"),
            std::string::npos);
  EXPECT_NE(message_of([] { matrix_file_from_json(parse_json(R"({"n":2,"rows":[[0,1],[-1]]})")); }).find("matrix.rows[1]"),
            std::string::npos);
  EXPECT_NE(message_of([] { matrix_file_from_json(parse_json(R"({"n":2,"rows":[[0,1.5],[-1,0]]})")); }).find("matrix.rows[0][1]"),
            std::string::npos);
  const std::string bad_arrow = R"({"vertices":2,"arrows":[{"name":"a","source":1,"target":3}]})";
  EXPECT_NE(message_of([&] { algebra_from_json(parse_json(bad_arrow)); }).find("algebra.arrows[0].target"), std::string::npos);
  AlgebraPtr alg = Algebra::create(linear_path_algebra(2));
  EXPECT_NE(message_of([&] { module_from_json(alg, parse_json(R"({"dims":[1,1],"maps":{"zz":[]}})")); }).find("unknown arrow"),
            std::string::npos);
  EXPECT_NE(message_of([&] { module_from_json(alg, parse_json(R"({"dims":[1,1],"maps":{}})")); }).find("module.maps.a1"),
            std::string::npos);
}

TEST(Rationals, ParseAndFormat) {
  EXPECT_EQ(parse_rational(Json("6/4"), "x"), Rational(3, 2));
  EXPECT_EQ(parse_rational(Json(-7), "x"), Rational(-7));
  EXPECT_EQ(parse_rational(Json("-12"), "x"), Rational(-12));
  EXPECT_THROW(parse_rational(Json(0.5), "x"), ParseError);
  EXPECT_THROW(parse_rational(Json("1/0"), "x"), ParseError);
  EXPECT_THROW(parse_rational(Json("1.5"), "x"), ParseError);
  EXPECT_EQ(format_rational(Rational(3, 2)), "3/2");
  EXPECT_EQ(format_rational(Rational(-4)), "-4");
}

TEST(Integers, BigValuesSurvive) {
  IntMatrix m(1, 2);
  m(0, 0) = Integer("123456789012345678901234567890");
  m(0, 1) = -3;
  Json j = to_json(m);
  EXPECT_TRUE(j[0][0].is_string());
  EXPECT_EQ(int_matrix_from_json(j, "m"), m);
}

TEST(Records, SiltingRecordJson) {
  AlgebraPtr alg = Algebra::create(linear_path_algebra(2));
  SiltingRecord r = left_mutation(root_record(alg), 1);
  Json j = to_json(r);
  EXPECT_EQ(j["word"], Json::array({2}));
  EXPECT_EQ(j["g_matrix"], Json::parse("[[1,1],[0,-1]]"));
  EXPECT_EQ(j["P1"], Json::parse("[0,1]"));
  EXPECT_EQ(j["P0"], Json::parse("[2,0]"));
  ASSERT_EQ(j["differential"].size(), 2u);
  ASSERT_EQ(j["differential"][0].size(), 1u);
}

TEST(Records, LaurentJson) {
  LaurentPoly p = LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 1);
  Json j = to_json(p);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["coeff"], "1");
}
