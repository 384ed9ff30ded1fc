#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace flex;

namespace {

const EpsScalar eps = EpsScalar::eps();

ErrorCode error_of(std::string_view text) {
  try {
    parse_system(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parsed without error: " << text);
  return ErrorCode::DivisionByZero;
}

}  // namespace

TEST_CASE("parsing the three-row example") {
  const auto s = fixture::load("example1.flex");
  REQUIRE(s.rows() == 3);
  REQUIRE(s.cols() == 3);
  CHECK(s.A()(0, 0) == ExternalScalar(-1, Neutrix::oslash(1)));
  CHECK(s.A()(0, 1) == ExternalScalar(1));
  CHECK(s.A()(0, 2) == ExternalScalar(mpq_class(-1, 5), Neutrix::pound(2)));
  CHECK(s.A()(1, 0) == ExternalScalar(1, Neutrix::pound(2)));
  CHECK(s.A()(1, 1) == ExternalScalar(-1));
  CHECK(s.A()(2, 2) == ExternalScalar(mpq_class(3, 20), Neutrix::oslash(1)));
  CHECK(s.B()(0) == ExternalScalar(2, Neutrix::pound(1)));
  CHECK(s.B()(2) == ExternalScalar(mpq_class(-1, 2), Neutrix::oslash()));
  CHECK(s.names() == std::vector<std::string>{"x1", "x2", "x3"});
}

TEST_CASE("small systems and literals") {
  const auto h = parse_system("0 x1 in o");
  CHECK(h.rows() == 1);
  CHECK(h.cols() == 1);
  CHECK(h.A()(0, 0) == ExternalScalar());
  CHECK(h.B()(0) == ExternalScalar(Neutrix::oslash()));

  const auto w = parse_system("x1 + x2 in w+2+eps*L  # comment\n\n# only a comment\nx1 - x2 in w^2 + 1/3");
  CHECK(w.B()(0) == ExternalScalar(EpsScalar::eps(-1) + 2, Neutrix::pound(1)));
  CHECK(w.B()(1) == ExternalScalar(EpsScalar::eps(-2) + mpq_class(1, 3)));
  CHECK(w.A()(1, 1) == ExternalScalar(-1));

  // Repeated variables add up; a left-hand constant moves to the right.
  const auto r = parse_system("2*x1 + x1 + 1 in 4 + eps*o");
  CHECK(r.A()(0, 0) == ExternalScalar(3));
  CHECK(r.B()(0) == ExternalScalar(3, Neutrix::oslash(1)));

  CHECK(parse_external("0.15") == ExternalScalar(mpq_class(3, 20)));
  CHECK(parse_external("(1+eps)*o") == ExternalScalar(Neutrix::oslash()));
  CHECK(parse_external("eps^-1*L") == ExternalScalar(Neutrix::pound(-1)));
  CHECK(parse_point("(4,0,-30)") == (EpsVector(3) << 4, 0, -30).finished());
  CHECK(parse_point("1/2, eps").size() == 2);
}

TEST_CASE("parse and validation errors") {
  CHECK(error_of("x1 in R") == ErrorCode::ValidationError);
  CHECK(error_of("1 in o") == ErrorCode::ValidationError);
  CHECK(error_of("") == ErrorCode::SyntaxError);
  CHECK(error_of("x1 + in 1") == ErrorCode::SyntaxError);
  CHECK(error_of("x1 in 1/0") == ErrorCode::SyntaxError);
  CHECK(error_of("x0 in 1") == ErrorCode::SyntaxError);
  CHECK(error_of("x1 + o in eps*o") == ErrorCode::ValidationError);
  CHECK(parse_system("o x1 + 1 in eps*o").B()(0) == ExternalScalar(-1, Neutrix::oslash(1)));

  try {
    parse_system("x1 in 1\nx1 + $ in 2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 6);
    CHECK(std::string(e.what()).find("line 2, col 6") != std::string::npos);
  }
  try {
    parse_system("x1 + x2 1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.col() == 9);
    CHECK(!e.expected().empty());
  }
}

TEST_CASE("solution text") {
  const SolutionSet z = canonicalize_solution(solve(fixture::load("example1.flex")));
  CHECK(format_solution_text(z) == "(4,0,-30) + eps*o*(1,0,0) + eps*L*(-0.1,0,1) + L*(1,1,0)");
  CHECK(format_solution_text(solve(fixture::load("example2.flex"))) == "INCONSISTENT (rows: 4, 5, 6)");
  CHECK(format_solution_text(solve(parse_system("x1 in 2\nx2 in -eps"))) == "(2,-eps)");
  CHECK(format_solution_text(solve(parse_system("x1 + x2 in 1"))) == "(1,0) + R*(-1,1)");
}

TEST_CASE("solution json") {
  const SolutionSet z = canonicalize_solution(solve(fixture::load("example1.flex")));
  const auto j = nlohmann::ordered_json::parse(format_solution_json(z));
  CHECK(j["status"] == "consistent");
  CHECK(j["rank"] == 3);
  CHECK(j["support"] == nlohmann::json::array({"4", "0", "-30"}));
  CHECK(j["modular"][1]["neutrix"] == "eps*L");
  CHECK(j["modular"][1]["direction"] == nlohmann::json::array({"-0.1", "0", "1"}));
  CHECK(j["linear"].empty());
  CHECK(j["permutation"] == nlohmann::json::array({1, 3, 2}));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"status", "rank", "support", "modular", "linear", "permutation",
                                         "offending_rows"});

  const auto bad = nlohmann::json::parse(format_solution_json(solve(fixture::load("example2.flex"))));
  CHECK(bad["status"] == "inconsistent");
  CHECK(bad["offending_rows"] == nlohmann::json::array({4, 5, 6}));

  SolutionSet q;
  q.support = (EpsVector(1) << EpsScalar(1) / (1 - eps)).finished();
  q.rank = 1;
  const auto exact = nlohmann::json::parse(format_solution_json(q, true));
  CHECK(exact["support"][0]["num"] == nlohmann::json::array({"1"}));
  CHECK(exact["support"][0]["den"] == nlohmann::json::array({"1", "-1"}));
  CHECK(exact["support"][0]["shift"] == 0);
  CHECK(format_solution_json(q) == format_solution_json(q));
}

TEST_CASE("echelon and feasibility text") {
  const auto s = fixture::load("example1.flex");
  const auto integ = integrate(s);
  const std::string ech = format_echelon(to_increasing_echelon(integ));
  CHECK(ech.find("H: y1=x1, y2=x3, y3=x2") != std::string::npos);
  CHECK(ech.find("r: 3") != std::string::npos);
  const std::string feas = format_feasibility(s, integ, "Inconclusive");
  CHECK(feas.rfind("F: (L, R, eps^-1*L)\n", 0) == 0);
  CHECK(feas.find("verdict: Inconclusive") != std::string::npos);
}

TEST_CASE("format and parse round trip") {
  for (const char* name : {"example1.flex", "example2.flex", "p.flex", "pe.flex", "robust_first.flex",
                           "robust_flexible.flex", "robust_uniform.flex"}) {
    const auto s = fixture::load(name);
    CHECK(parse_system(format_system(s)) == s);
  }
  oracle::Gen g(41);
  for (int t = 0; t < 500; ++t) {
    const FlexibleSystem s = g.system();
    const std::string text = format_system(s);
    CAPTURE(text);
    CHECK(parse_system(text) == s);
    CHECK(format_system(parse_system(text)) == text);
  }
}
