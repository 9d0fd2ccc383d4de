#include <doctest.h>

#include "support.hpp"

using namespace testsupport;

TEST_CASE("parse examples") {
  auto nat = R("nat");
  const auto target = P(nat, "T^5+T^4+T^3+T^2+T+1");
  CHECK(target == Polynomial::from_naturals(nat, {1, 1, 1, 1, 1, 1}));
  CHECK(poly_eq(P(nat, "(T+1)*(T^4+T^2+1)"), target) == Verdict::Equal);
  CHECK(poly_eq(P(nat, "(T+1)(T^4+T^2+1)"), target) == Verdict::Equal);
  auto s0 = R("s0");
  CHECK(poly_eq(P(s0, "(T+x)*(T+y)"), P(s0, "T^2+T+1")) == Verdict::Equal);
}

TEST_CASE("whitespace is insignificant") {
  auto nat = R("nat");
  CHECK(P(nat, " ( T + 1 ) ^ 2 \n* 3 ") == P(nat, "(T+1)^2*3"));
}

TEST_CASE("precedence and associativity") {
  auto nat = R("nat");
  CHECK(P(nat, "T+1*T") == P(nat, "T+(1*T)"));
  CHECK(P(nat, "(T+1)^2") != P(nat, "T+1^2"));
  CHECK(P(nat, "2*T^3") == P(nat, "2*(T^3)"));
  CHECK(P(nat, "(T+1)(T+2)^2") == P(nat, "(T+1)*((T+2)^2)"));
  CHECK(P(nat, "(T)(T)T") == P(nat, "T^3"));
}

TEST_CASE("juxtaposition needs a parenthesized left operand") {
  auto nat = R("nat");
  CHECK_THROWS_AS(P(nat, "T(T+1)"), ParseError);
  CHECK_THROWS_AS(P(nat, "2T"), ParseError);
  CHECK_THROWS_AS(P(nat, "T T"), ParseError);
}

TEST_CASE("semiring literals") {
  auto q = R("nonneg-rational");
  CHECK(P(q, "1/2*T+3") == Polynomial(q, {lit(q, "3"), lit(q, "1/2")}));
  auto t = R("tropical");
  CHECK(P(t, "T+t(-3/2)") == Polynomial(t, {lit(t, "t(-3/2)"), t->one()}));
  CHECK(P(t, "tinf*T+t(1)") == Polynomial::constant(t, lit(t, "t(1)")));
  auto m = R("monoid-nat");
  CHECK(P(m, "3*m(1/2)*T") == Polynomial::monomial(m, MonoidNatSemiring::term(mpq_class(1, 2), 3), 1));
  auto s0 = R("s0");
  CHECK(poly_eq(P(s0, "x^2+1"), P(s0, "x")) == Verdict::Equal);
}

TEST_CASE("render examples") {
  auto nat = R("nat");
  CHECK(render(P(nat, "T^5+T^4+T^3+T^2+T+1")) == "T^5+T^4+T^3+T^2+T+1");
  CHECK(render(Polynomial(nat)) == "0");
  CHECK(render(P(nat, "2*T^2+3")) == "2*T^2+3");
  auto t = R("tropical");
  CHECK(render(P(t, "T+t(0)")) == "T+t(0)");
  CHECK(render(Polynomial::from_naturals(t, {1, 1})) == "T+t(0)");
  auto s0 = R("s0");
  CHECK(render(P(s0, "(x+2)*T+1")) == "(x+2)*T+1");
}

TEST_CASE("syntax errors carry positions") {
  auto nat = R("nat");
  try {
    P(nat, "T+");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
    CHECK(e.line() == 1);
    CHECK(e.column() == 3);
  }
  try {
    P(nat, "T+1\n+*T");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 2);
  }
}

TEST_CASE("rejected inputs") {
  auto nat = R("nat");
  for (const char* bad : {"", "   ", "T+", "(T+1", "T+1)", "T^", "T^-1", "T^x", "x", "1/2", "T**2",
                          "t(1)", "T^99999999999999999999", "+T", "()", "T ^ 4097"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(P(nat, bad), ParseError);
  }
  CHECK_THROWS_AS(P(nat, "(T^4096)^17"), ParseError);
  CHECK_NOTHROW(P(nat, "T^4096"));
  CHECK_THROWS_AS(P(R("boolean"), "m(2)"), ParseError);
}

TEST_CASE("error positions stay within the input") {
  auto nat = R("nat");
  Rng rng(13);
  const std::string alphabet = "T+*^()12 x/";
  int rejected = 0;
  for (int i = 0; i < 3000; ++i) {
    std::string src;
    const auto n = uniform_int(rng, 0, 10);
    for (int j = 0; j < n; ++j) src += alphabet[static_cast<std::size_t>(uniform_int(rng, 0, alphabet.size() - 1))];
    try {
      (void)P(nat, src);
    } catch (const ParseError& e) {
      ++rejected;
      CAPTURE(src);
      CHECK(e.offset() <= src.size());
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("parse_ast shapes") {
  const auto ast = parse_ast("(T+1)(T^2+1)");
  CHECK(ast.kind == ExprAst::Kind::Mul);
  REQUIRE(ast.children.size() == 2);
  CHECK(ast.children[0].kind == ExprAst::Kind::Paren);
  CHECK(ast.children[1].offset == 5);
  const auto pow = parse_ast("T^3");
  CHECK(pow.kind == ExprAst::Kind::Pow);
  CHECK(pow.exponent == 3);
}
