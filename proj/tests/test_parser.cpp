#include "doctest.h"
#include "fixtures.hpp"
#include "hkr/parser.hpp"

using namespace hkr;
using namespace hkr::testing;

TEST_CASE("algebra grammar") {
  CHECK(parse_algebra("var x weight 1; rel x^2;") == dual_numbers());
  CHECK(parse_algebra("var x weight 1;\nvar y weight 1;\nrel x^2;\nrel x*y;\n") == plane_pair());
  CHECK(parse_algebra("# the line\nvar x weight 1;") == smooth_line());

  auto a = parse_algebra("var x weight 2; var y weight 3; rel 3/2*x^3 - (y - 0)*y + 2*x*x^2;");
  REQUIRE(a.relations.size() == 1);
  CHECK(a.ring->format(a.relations[0]) == "7/2*x^3 - y^2");
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_algebra("var x weight 1;\nrel x^2 + x;");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
    CHECK(std::string(e.what()).find("relation 1 'x^2 + x' is not weight-homogeneous") != std::string::npos);
  }
  try {
    parse_algebra("var x weight 1;\nrel x*q;");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
    CHECK(std::string(e.what()).find("unknown variable 'q'") != std::string::npos);
  }
  CHECK_THROWS_WITH_AS(parse_algebra("var x weight 0;"), doctest::Contains("positive weight"), ParseError);
  CHECK_THROWS_WITH_AS(parse_algebra("var x weight -2;"), doctest::Contains("positive weight"), ParseError);
  CHECK_THROWS_AS(parse_algebra("var x weight 1; rel x^2"), ParseError);
  CHECK_THROWS_AS(parse_algebra("var x weight 1; rel x $ 2;"), ParseError);
  CHECK_THROWS_AS(parse_algebra("var x weight 1; var x weight 2;"), ParseError);
  CHECK_THROWS_AS(parse_algebra("var x weight 1; rel x - x;"), ParseError);
  CHECK_THROWS_AS(parse_algebra("var x weight 1; rel 1/0*x;"), ParseError);
  CHECK_THROWS_AS(parse_algebra("bogus;"), ParseError);
}

TEST_CASE("format and parse round trip") {
  for (const auto& a : {smooth_line(), dual_numbers(), plane_pair(),
                        parse_algebra("var u weight 2; var v weight 3; rel -5/7*u^3 + v^2; rel u*v;")}) {
    const std::string text = format_algebra(a);
    CHECK(parse_algebra(text) == a);
    CHECK(format_algebra(parse_algebra(text)) == text);
  }
}

TEST_CASE("twisted complex json") {
  Resolvent res = koszul_tate_resolve(dual_numbers(), {2, 4});
  const std::string text = R"({
    "generators": [{"name": "e0", "degree": 0, "weight": 0},
                   {"name": "e1", "degree": -1, "weight": 1},
                   {"name": "u", "degree": -2, "weight": 2}],
    "differential": [["0", "x", "-z1_2_0"], ["0", "0", "x"], [0, "0", "0"]]
  })";
  TwistedComplex F = parse_twisted_complex(text, res.R);
  CHECK(F.rank() == 3);
  CHECK(F.differential[0][2] == -Element::generator(1));
  CHECK(check_twisted(F).empty());
  CHECK_THROWS_AS(parse_twisted_complex("{\"generators\": []", res.R), Error);
  CHECK_THROWS_WITH_AS(parse_twisted_complex(R"({"generators":[{"name":"e","degree":0,"weight":0}],
                                                 "differential":[["w"]]})",
                                             res.R),
                       doctest::Contains("unknown variable"), Error);
}
