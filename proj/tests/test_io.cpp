#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "codealg/fixtures.hpp"
#include "codealg/io.hpp"

using namespace codealg;

TEST_CASE("code file parsing") {
  std::istringstream ok("# comment\n3 2\n011\n101  # trailing comment\n");
  LinearCode C = parse_code_file(ok, "ok");
  CHECK(C.length() == 3);
  CHECK(C.dim() == 2);

  auto expect_parse_error = [](const std::string& text, const std::string& fragment) {
    std::istringstream in(text);
    try {
      parse_code_file(in, "t");
      FAIL("expected ParseError for: ", text);
    } catch (const Error& e) {
      CHECK(e.code() == errc::parse_error);
      CAPTURE(e.what());
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_parse_error("3 2\n011\n0x1\n", "t:3:2");          // bad character, line and column
  expect_parse_error("3 2\n011\n10\n", "length");          // row length
  expect_parse_error("3\n011\n", "header");                // bad header
  expect_parse_error("3 2\n011\n", "expected 2");          // row count
  expect_parse_error("", "header");

  // dependent rows keep their own error code
  std::istringstream dep("3 3\n011\n101\n110\n");
  try {
    parse_code_file(dep, "t");
    FAIL("expected DependentRows");
  } catch (const Error& e) {
    CHECK(e.code() == errc::dependent_rows);
  }

  // k = 0 gives the zero code
  std::istringstream zero("4 0\n");
  CHECK(parse_code_file(zero, "z").dim() == 0);
}

TEST_CASE("scalar literals") {
  CHECK(parse_scalar("3") == Scalar(3));
  CHECK(parse_scalar("-3/6") == Scalar(frac(-1, 2)));
  CHECK(parse_scalar("1/2+1/3*sqrt(5)") == Scalar(frac(1, 2), frac(1, 3), 5));
  CHECK(parse_scalar("1/2-1/3*sqrt(5)") == Scalar(frac(1, 2), frac(-1, 3), 5));
  CHECK(parse_scalar("-1/3*sqrt(5)") == Scalar(0, frac(-1, 3), 5));
  CHECK(parse_scalar("sqrt(2)") == Scalar(0, 1, 2));
  CHECK(parse_scalar(" 2 + sqrt(2) ") == Scalar(2, 1, 2));
  CHECK_THROWS_AS(parse_scalar("1/2+"), Error);
  CHECK_THROWS_AS(parse_scalar("sqrt(4)"), Error);  // not squarefree
  CHECK_THROWS_AS(parse_scalar("sqrt(0)"), Error);
  CHECK_THROWS_AS(parse_scalar("1/2*3"), Error);
  CHECK_THROWS_AS(parse_scalar(""), Error);

  // round trip through str()
  for (const char* lit : {"-7/3", "0", "1/2+1/3*sqrt(5)", "-1/3*sqrt(5)", "2+sqrt(2)"}) {
    Scalar s = parse_scalar(lit);
    CHECK(parse_scalar(s.str()) == s);
  }
}

TEST_CASE("params file parsing") {
  std::istringstream ok(
      "# params\n"
      "a = 1/4\n"
      "b = 1/2\n"
      "c = 1\n"
      "d = 2\n"
      "a[1,11110000] = 1/3\n"
      "b[11110000,00111100] = 2\n");
  ParsedParams P = parse_params_file(ok, "p");
  CHECK(P.a == Scalar(frac(1, 4)));
  CHECK(P.disc == 2);
  CHECK(P.overrides.size() == 2);
  CHECK(P.overrides[0].kind == 'a');
  CHECK(P.overrides[0].i == 0);

  auto expect_fail = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_params_file(in, "p"), Error);
  };
  expect_fail("a = 1\nb = 1\n");                    // missing c
  expect_fail("a = 1\nb = 1\nc = 1\nd = 4\n");      // non-squarefree
  expect_fail("a = 1\nb = 1\nc = 1\nq = 2\n");      // unknown key
  expect_fail("a = x\nb = 1\nc = 1\n");             // bad scalar
  expect_fail("a 1\nb = 1\nc = 1\n");               // missing '='

  // override keys outside the domain are rejected at realization
  LinearCode E = LinearCode::from_generators({"011", "101"});
  std::istringstream bad("a = 1\nb = 1\nc = 1\na[1,011] = 2\n");
  ParsedParams Q = parse_params_file(bad, "p");
  CHECK_THROWS_AS(realize_params(E, Q), Error);  // i = 1 not in supp(011)
  std::istringstream good("a = 1\nb = 1\nc = 1\na[2,011] = 2\n");
  StructureParams S = realize_params(E, parse_params_file(good, "p"));
  CHECK(S.a(1, word_from_str("011")) == Scalar(2));
}

TEST_CASE("report JSON round trips") {
  CodeAlgebra E = fixtures::even3_algebra();
  json j = algebra_report(E);
  json parsed = json::parse(j.dump());
  CHECK(parsed == j);
  json spec = element_report(E, E.basis_element(0));
  CHECK(json::parse(spec.dump()) == spec);
  // scalar strings inside reports parse back to exact values
  for (const auto& s : spec["spectrum"]["eigenvalues"])
    CHECK(!parse_scalar(s.get<std::string>()).str().empty());
}

TEST_CASE("fixture reports match their goldens") {
  for (const char* name : fixtures::kNames) {
    std::string expected = fixtures::golden(name);
    REQUIRE(!expected.empty());
    auto diffs = fixtures::diff(json::parse(expected), fixtures::run_example(name));
    CAPTURE(name);
    for (const auto& d : diffs) MESSAGE(d);
    CHECK(diffs.empty());
  }
}

TEST_CASE("fusion law serialization") {
  CodeAlgebra E = fixtures::even3_algebra();
  auto dec = toral_peirce(E, 0);
  FusionLaw law = fusion_law(E, E.basis_element(0), dec);
  json j = fusion_law_json(law);
  CHECK(j["labels"].size() == law.labels.size());
  json back = json::parse(j.dump());
  CHECK(back == j);
}
