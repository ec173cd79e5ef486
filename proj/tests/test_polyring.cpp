#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "darboux/jet.hpp"
#include "darboux/parser.hpp"
#include "darboux/polynomial.hpp"
#include "darboux/rational.hpp"
#include "test_support.hpp"

using namespace darboux;
using testsupport::random_polynomial;
using testsupport::random_unit_jet;

namespace {
const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYE = {"x", "y", "eps1"};

Polynomial P(const std::string& text, const std::vector<std::string>& vars = XYE) {
  return parse_polynomial(text, vars);
}
}  // namespace

TEST_CASE("rational parsing and normalization") {
  CHECK(parse_rational("2/4") == Rational(1) / 2);
  CHECK(parse_rational("-6/4") == Rational(-3) / 2);
  CHECK(parse_rational("7") == Rational(7));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("8/4")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("exact rational powers") {
  CHECK(*pow_exact(Rational(4), Rational(1) / 2) == 2);
  CHECK(*pow_exact(Rational(8) / 27, Rational(2) / 3) == Rational(4) / 9);
  CHECK(*pow_exact(Rational(-8), Rational(1) / 3) == -2);
  CHECK(!pow_exact(Rational(2), Rational(1) / 2).has_value());
  CHECK(!pow_exact(Rational(-4), Rational(1) / 2).has_value());
  CHECK(*pow_exact(Rational(5), Rational(-2)) == Rational(1) / 25);
  CHECK(*pow_exact(Rational(-1), Rational(3)) == -1);
}

TEST_CASE("primitive direction vectors") {
  const std::vector<Rational> v = {Rational(2) / 3, Rational(-4) / 3, Rational(2)};
  CHECK(make_primitive(v) == std::vector<Rational>{Rational(1), Rational(-2), Rational(3)});
  const std::vector<Rational> w = {Rational(0), Rational(-2), Rational(4)};
  CHECK(normalize_direction(w) == std::vector<Rational>{Rational(0), Rational(1), Rational(-2)});
  const std::vector<Rational> zero = {Rational(0), Rational(0)};
  CHECK(make_primitive(zero) == zero);
}

TEST_CASE("parser matches hand expansions") {
  CHECK(P("(x-eps1)^2") == P("x^2 - 2*x*eps1 + eps1^2"));
  CHECK(P("x*y - y*x").is_zero());
  CHECK(P("(x-y)*(x+y)") == P("x^2 - y^2"));
  CHECK(P("-x + x").is_zero());
  CHECK(P("1/2*x + 1/2*x") == P("x"));
  CHECK(P("(x+1)^0") == P("1"));
}

TEST_CASE("parser reports positions and bad input") {
  CHECK_THROWS_AS(P("x +"), ParseError);
  CHECK_THROWS_AS(P("x ^ -2"), ParseError);
  CHECK_THROWS_AS(P("x ^ y"), ParseError);
  CHECK_THROWS_AS(P("(x"), ParseError);
  CHECK_THROWS_AS(P("x y"), ParseError);  // implicit multiplication rejected
  CHECK_THROWS_AS(P("x / 2"), ParseError);

  try {
    P("x + foo");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
    CHECK(std::string(e.what()).find("foo") != std::string::npos);
  }
}

TEST_CASE("printing round-trips through the parser") {
  const std::vector<std::string> corpus = {
      "(x-eps1)^2",
      "x*y - y*x",
      "(x-y)*(x+y)",
      "-x^3 + 1/2*x*y - 7",
      "1",
      "0",
      "eps1^4 - 2/3*eps1^2*y^2 + y^4",
      "x^2*y + x^3",
      "(x + y + eps1)^3",
      "-(x - y)*(x + y)*(x - eps1)",
      "3/2",
      "x - 1/5",
  };
  for (const auto& text : corpus) {
    const Polynomial once = P(text);
    const Polynomial twice = P(once.str());
    CHECK(once == twice);
  }
}

TEST_CASE("canonical printing order is graded lexicographic") {
  CHECK(P("eps1^2 + x^2 - 2*x*eps1").str() == "x^2 - 2*x*eps1 + eps1^2");
  CHECK(P("y + x").str() == "x + y");
  CHECK(Polynomial(XYE).str() == "0");
}

TEST_CASE("arithmetic examples") {
  CHECK(P("(x+y)") * P("(x-y)") == P("x^2 - y^2"));
  CHECK(P("x+1").pow(0) == P("1"));
  CHECK((P("x^2-y^2") + P("y^2-x^2")).is_zero());
  CHECK_THROWS_AS(P("x", XY) + P("x", XYE), std::invalid_argument);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = random_polynomial(rng, XYE);
    const Polynomial b = random_polynomial(rng, XYE);
    const Polynomial c = random_polynomial(rng, XYE);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("partial derivatives") {
  CHECK(P("x^2*y").derivative("x") == P("2*x*y"));
  CHECK(P("x - eps1").derivative("eps1") == P("-1"));
  CHECK((P("(x-y)*(x+y)")).derivative("y") == P("-2*y"));
  CHECK_THROWS_AS(P("x").derivative("nope"), std::invalid_argument);
}

TEST_CASE("substitution examples") {
  const std::vector<std::string> uve = {"u", "v", "eps"};
  std::map<std::string, Polynomial> chart = {
      {"x", parse_polynomial("eps*u", uve)},
      {"y", parse_polynomial("eps*v", uve)},
      {"eps1", parse_polynomial("eps", uve)},
  };
  CHECK(P("x - eps1").substitute(uve, chart) == parse_polynomial("eps*u - eps", uve));
  CHECK(P("x - eps1").substitute(uve, chart) ==
        parse_polynomial("eps", uve) * parse_polynomial("u - 1", uve));

  std::map<std::string, Polynomial> blowup = {{"y", P("x*y")}};
  CHECK(P("x + y").substitute(XYE, blowup) == P("x") * P("1 + y"));

  CHECK(P("x^2 - y").substitute(XYE, {}) == P("x^2 - y"));  // identity bindings
  CHECK_THROWS_AS(P("x").substitute(XYE, {{"x", P("u - 1", {"u", "v"})}}),
                  std::invalid_argument);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(777);
  const std::vector<std::string> uv = {"u", "v"};
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = random_polynomial(rng, XY, 3, 4);
    const Polynomial b = random_polynomial(rng, XY, 3, 4);
    const std::map<std::string, Polynomial> bindings = {
        {"x", random_polynomial(rng, uv, 2, 3)},
        {"y", random_polynomial(rng, uv, 2, 3)},
    };
    CHECK((a * b).substitute(uv, bindings) ==
          a.substitute(uv, bindings) * b.substitute(uv, bindings));
    CHECK((a + b).substitute(uv, bindings) ==
          a.substitute(uv, bindings) + b.substitute(uv, bindings));
  }
}

TEST_CASE("monomial content") {
  {
    const auto [beta, q] = P("x^2*y + x^3", XY).monomial_content();
    CHECK(beta.exponents() == std::vector<int>{2, 0});
    CHECK(q == P("y + x", XY));
  }
  {
    const std::vector<std::string> z = {"z"};
    const auto [beta, q] = parse_polynomial("1 + z", z).monomial_content();
    CHECK(beta.is_unit());
    CHECK(q == parse_polynomial("1 + z", z));
  }
  {
    const std::vector<std::string> uve = {"u", "v", "eps"};
    const auto [beta, q] = parse_polynomial("eps*u - eps", uve).monomial_content();
    CHECK(beta.exponents() == std::vector<int>{0, 0, 1});
    CHECK(q == parse_polynomial("u - 1", uve));
  }
  CHECK_THROWS_AS(Polynomial(XY).monomial_content(), std::domain_error);
}

TEST_CASE("monomial content reconstructs exactly") {
  std::mt19937 rng(424242);
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = testsupport::random_nonzero_polynomial(rng, XYE);
    const auto [beta, q] = p.monomial_content();
    CHECK(Polynomial::monomial(XYE, beta, Rational(1)) * q == p);
    const auto [beta2, q2] = q.monomial_content();
    CHECK(beta2.is_unit());
  }
}

TEST_CASE("jet geometric series") {
  const std::vector<std::string> z = {"z"};
  const Jet u(parse_polynomial("1 + z", z), 3);
  CHECK(u.invert().body() == parse_polynomial("1 - z + z^2 - z^3", z));
}

TEST_CASE("jet log of exp") {
  const std::vector<std::string> z = {"z"};
  const Jet w(parse_polynomial("z", z), 4);
  CHECK(w.exp().log() == w);
}

TEST_CASE("jet square root against the binomial series") {
  const std::vector<std::string> z = {"z"};
  const int order = 4;
  const Jet u(parse_polynomial("1 + z", z), order);
  const Jet root = u.pow(Rational(1) / 2);
  CHECK(root * root == u);

  // Independent oracle: coefficients of (1+z)^(1/2) are binom(1/2, k).
  Polynomial expected(z);
  Rational binom(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      binom *= (Rational(1) / 2 - (k - 1));
      binom /= k;
    }
    expected = expected + Polynomial::monomial(z, Monomial({k}), binom);
  }
  CHECK(root.body() == expected);
}

TEST_CASE("jet unit preconditions") {
  const std::vector<std::string> z = {"z"};
  CHECK_THROWS_AS(Jet(parse_polynomial("2 + z", z), 3).invert(), std::domain_error);
  CHECK_THROWS_AS(Jet(parse_polynomial("z", z), 3).invert(), std::domain_error);
  CHECK_THROWS_AS(Jet(parse_polynomial("1 + z", z), 3).exp(), std::domain_error);
  CHECK_THROWS_AS(Jet(parse_polynomial("z", z), 3).log(), std::domain_error);
  CHECK_THROWS_AS(Jet(parse_polynomial("2 + z", z), 3).pow(Rational(1) / 2), std::domain_error);
}

TEST_CASE("jet identities at every order") {
  std::mt19937 rng(90210);
  const std::vector<std::string> vars = {"u", "v"};
  for (int order = 1; order <= 8; ++order) {
    for (int rep = 0; rep < 25; ++rep) {
      const Jet u = random_unit_jet(rng, vars, order);
      CHECK(u * u.invert() == Jet::one(vars, order));
      CHECK(u.log().exp() == u);
      std::uniform_int_distribution<int> pd(-5, 5);
      std::uniform_int_distribution<int> qd(1, 4);
      const int p = pd(rng);
      const int q = qd(rng);
      const Jet lhs = u.pow(Rational(p) / q);
      Jet lhs_q = Jet::one(vars, order);
      for (int i = 0; i < q; ++i) lhs_q = lhs_q * lhs;
      Jet rhs = Jet::one(vars, order);
      const Jet ui = p >= 0 ? u : u.invert();
      for (int i = 0; i < std::abs(p); ++i) rhs = rhs * ui;
      CHECK(lhs_q == rhs);
    }
  }
}
