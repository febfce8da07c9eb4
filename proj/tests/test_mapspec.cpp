#include <doctest.h>

#include <cmath>

#include "zerocert/errors.hpp"
#include "zerocert/mapspec.hpp"

using namespace zerocert;

TEST_CASE("parse_map basics") {
  const MapSpec id = parse_map("x1", 1);
  CHECK(id.n == 1);
  CHECK(id.m == 1);
  CHECK(id.evaluate(Vec{2.5})[0] == 2.5);

  const MapSpec z2 = parse_map("x1^2 - x2^2, 2*x1*x2", 2);
  CHECK(z2.m == 2);
  const Vec y = z2.evaluate(Vec{1.0, 1.0});
  CHECK(y[0] == 0.0);
  CHECK(y[1] == 2.0);

  const MapSpec trig = parse_map("sin(x1), cos(x1)", 1);
  CHECK(trig.evaluate(Vec{0.0}) == Vec{0.0, 1.0});
}

TEST_CASE("precedence") {
  CHECK(parse_map("-x1^2", 1).evaluate(Vec{3.0})[0] == -9.0);
  CHECK(parse_map("2 + 3*x1", 1).evaluate(Vec{2.0})[0] == 8.0);
  CHECK(parse_map("8 / 2 / 2", 1).evaluate(Vec{0.0})[0] == 2.0);
  CHECK(parse_map("8 - 2 - 2", 1).evaluate(Vec{0.0})[0] == 4.0);
  CHECK(parse_map("(x1 + 1)^3", 1).evaluate(Vec{1.0})[0] == 8.0);
  CHECK(parse_map("x1^-1", 1).evaluate(Vec{4.0})[0] == 0.25);
  CHECK(parse_map("exp(0) + sqrt(4) + abs(-3)", 1).evaluate(Vec{0.0})[0] == 6.0);
  CHECK(parse_map("1.5e1", 1).evaluate(Vec{0.0})[0] == 15.0);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_map("x3", 2), UndefinedVariable);
  CHECK_THROWS_AS(parse_map("x0", 2), UndefinedVariable);
  CHECK_THROWS_AS(parse_map("x1^2.5", 1), NonIntegerExponent);
  CHECK_THROWS_AS(parse_map("x1^x1", 1), NonIntegerExponent);
  CHECK_THROWS_AS(parse_map("x1 +", 1), SyntaxError);
  CHECK_THROWS_AS(parse_map("", 1), SyntaxError);
  CHECK_THROWS_AS(parse_map("foo(x1)", 1), SyntaxError);
  CHECK_THROWS_AS(parse_map("(x1", 1), SyntaxError);
  CHECK_THROWS_AS(parse_map("x1 x1", 1), SyntaxError);
  CHECK_THROWS_AS(parse_map("x1,", 1), SyntaxError);

  try {
    parse_map("x1 +\n  * 2", 1);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  try {
    parse_map("x3", 2);
  } catch (const UndefinedVariable& e) {
    CHECK(e.index() == 3);
    CHECK(e.n() == 2);
  }
}

TEST_CASE("depth limit") {
  std::string deep = "x1";
  for (int i = 0; i < 70; ++i) deep = "sin(" + deep + ")";
  CHECK_THROWS_AS(parse_map(deep, 1), SyntaxError);
  std::string ok = "x1";
  for (int i = 0; i < 60; ++i) ok = "sin(" + ok + ")";
  CHECK_NOTHROW(parse_map(ok, 1));
}

TEST_CASE("domain errors carry the point") {
  const MapSpec inv = parse_map("1/x1", 1);
  CHECK_THROWS_AS(inv.evaluate(Vec{0.0}), DomainError);
  try {
    parse_map("x1, sqrt(x2)", 2).evaluate(Vec{1.0, -4.0});
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(e.point() == Vec{1.0, -4.0});
  }
  CHECK_THROWS_AS(parse_map("x1^-1", 1).evaluate(Vec{0.0}), DomainError);
  CHECK_THROWS_AS(inv.evaluate(Vec{1.0, 2.0}), InvalidInput);
}

TEST_CASE("pretty printing") {
  CHECK(parse_map("x1 - (x2 - 3)", 2).to_string() == "x1 - (x2 - 3)");
  CHECK(parse_map("(x1 - x2) - 3", 2).to_string() == "x1 - x2 - 3");
  CHECK(parse_map("(-x1)^2", 1).to_string() == "(-x1)^2");
  CHECK(parse_map("-x1^2", 1).to_string() == "-x1^2");
  CHECK(parse_map("x1/(2*x1)", 1).to_string() == "x1 / (2 * x1)");
  for (const BuiltinMap& b : builtin_maps()) {
    const MapSpec s = parse_map(b.text, b.n);
    const MapSpec again = parse_map(s.to_string(), b.n);
    REQUIRE(again.components.size() == s.components.size());
    for (std::size_t i = 0; i < s.components.size(); ++i) CHECK(again.components[i] == s.components[i]);
  }
}

TEST_CASE("digest ignores whitespace only") {
  CHECK(map_digest("x1 + 3, x2") == map_digest("x1+3,x2"));
  CHECK(map_digest("x1 + 3, x2") == parse_map(" x1 +\t3 ,\nx2", 2).digest);
  CHECK(map_digest("x1+3") != map_digest("x1+4"));
  CHECK(map_digest("").size() == 64);
}

TEST_CASE("self maps take n from the component count") {
  const MapSpec s = parse_self_map("(x1 + 0.2)/2, (x2 - 0.1)/2");
  CHECK(s.n == 2);
  CHECK(s.m == 2);
  CHECK_THROWS_AS(parse_self_map("x3, x1"), UndefinedVariable);
}

TEST_CASE("lipschitz estimates") {
  const Region d = Region::unit_disk(2);
  const double id = lipschitz_estimate(parse_map("x1, x2", 2), d, 200);
  CHECK(id >= 2.0);
  CHECK(id <= 2.0001);
  CHECK(lipschitz_estimate(parse_map("1, 2", 2), d, 100) <= 1e-6);
  CHECK(lipschitz_estimate(parse_map("3*x1", 1), Region::unit_disk(1), 100) ==
        doctest::Approx(6.0).epsilon(1e-6));
  CHECK_THROWS_AS(lipschitz_estimate(parse_map("x1", 1), Region::unit_disk(1), 99), InvalidInput);
}

TEST_CASE("builtins") {
  REQUIRE(find_builtin("z2") != nullptr);
  CHECK(find_builtin("nope") == nullptr);
  for (const char* name : {"opposite-id", "shifted", "z2", "coercive-shift", "rotation-half"}) {
    const BuiltinMap* b = find_builtin(name);
    REQUIRE(b != nullptr);
    CHECK_NOTHROW(parse_map(b->text, b->n));
  }
}
