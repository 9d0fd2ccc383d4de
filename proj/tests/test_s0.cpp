#include <doctest.h>

#include "support.hpp"

using namespace testsupport;

namespace {

std::size_t multiplicity(const S0Terms& t) {
  mpz_class n = 0;
  for (const auto& [k, c] : t) n += c;
  return n.get_ui();
}

S0Terms random_raw(Rng& rng, int max_terms = 6, int spread = 4, int max_coeff = 3) {
  S0Terms t;
  const auto n = uniform_int(rng, 1, max_terms);
  for (int i = 0; i < n; ++i) t[uniform_int(rng, -spread, spread)] += uniform_int(rng, 1, max_coeff);
  return t;
}

// Applies up to `steps` random applicable rewrites.
S0Terms random_walk(S0Terms t, Rng& rng, int steps) {
  for (int i = 0; i < steps; ++i) {
    std::vector<RewriteStep> moves;
    for (const auto& [k, c] : t) {
      moves.push_back({RewriteKind::Expand, k});
      if (t.contains(k + 2)) moves.push_back({RewriteKind::Contract, k + 1});
    }
    const auto& m = moves[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(moves.size()) - 1))];
    t = *s0_apply(t, m);
  }
  return t;
}

// Smallest-looking representative of a + b*zeta: 1 and x for positive parts,
// x^3 = -1 and x^4 = -zeta for negative ones, 1 + x^3 for the image 0.
S0Terms representative(const EisensteinImage& z) {
  S0Terms t;
  if (z.a > 0) t[0] += z.a;
  if (z.a < 0) t[3] += -z.a;
  if (z.b > 0) t[1] += z.b;
  if (z.b < 0) t[4] += -z.b;
  if (t.empty()) t = {{0, 1}, {3, 1}};
  return t;
}

}  // namespace

TEST_CASE("s0_contract examples") {
  CHECK(s0_contract({{1, 1}, {-1, 1}}).terms == S0Terms{{0, 1}});
  CHECK(s0_contract({{2, 1}, {0, 1}}).terms == S0Terms{{1, 1}});
  CHECK(s0_contract({{0, 1}}).terms == S0Terms{{0, 1}});
  CHECK(s0_contract({}).terms.empty());
  // Smallest k first: x^2 + 1 + x^-2 contracts at k = -1, leaving x^2 + x^-1.
  CHECK(s0_contract({{2, 1}, {0, 1}, {-2, 1}}).terms == S0Terms{{2, 1}, {-1, 1}});
}

TEST_CASE("s0_contract yields a fixed point within the multiplicity bound") {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    const S0Terms raw = random_raw(rng, 8, 5, 4);
    const S0Value v = s0_contract(raw);
    for (const auto& [k, c] : v.terms) CHECK_FALSE(v.terms.contains(k + 2));
    // Each contraction lowers the multiplicity by exactly one.
    CHECK(multiplicity(raw) - multiplicity(v.terms) <= multiplicity(raw) - 1);
    CHECK(s0_separate(v) == s0_separate(S0Value{raw}));
  }
}

TEST_CASE("s0_eq examples") {
  const S0Value xy{{{1, 1}, {-1, 1}}};
  const S0Value one{{{0, 1}}};
  auto r1 = s0_eq(xy, one);
  CHECK(r1.verdict == Verdict::Equal);
  CHECK(s0_replay(xy.terms, r1.trace, one.terms));

  auto r2 = s0_eq(S0Value{{{1, 1}}}, one);
  CHECK(r2.verdict == Verdict::Distinct);
  CHECK(r2.method == S0EqMethod::Separation);

  const S0Value lhs{{{1, 1}, {-2, 1}}};
  const S0Value rhs{{{2, 1}, {-1, 1}}};
  auto r3 = s0_eq(lhs, rhs);
  CHECK(r3.verdict == Verdict::Equal);
  CHECK(r3.method == S0EqMethod::GraphSearch);
  CHECK(r3.trace.size() == 2);
  CHECK(s0_replay(lhs.terms, r3.trace, rhs.terms));
}

TEST_CASE("s0_eq: zero is only congruent to itself") {
  const S0Value zero{};
  CHECK(s0_eq(zero, zero).verdict == Verdict::Equal);
  // 1 + x^3 has image 0 but is not the empty sum.
  auto r = s0_eq(zero, S0Value{{{0, 1}, {3, 1}}});
  CHECK(r.verdict == Verdict::Distinct);
}

TEST_CASE("s0_eq reports Unknown when the budget is too small") {
  // The non-confluent pair needs two steps.
  const S0Value lhs{{{1, 1}, {-2, 1}}};
  const S0Value rhs{{{2, 1}, {-1, 1}}};
  auto r = s0_eq(lhs, rhs, RewriteBudget{1, 1});
  CHECK(r.verdict == Verdict::Unknown);
  CHECK(r.trace.empty());
  CHECK(S0Semiring(RewriteBudget{1, 1}).eq(Element(lhs), Element(rhs)) == Verdict::Unknown);
}

TEST_CASE("s0_separate examples and relations") {
  CHECK(s0_separate(S0Value{{{0, 1}}}) == EisensteinImage{1, 0});
  CHECK(s0_separate(S0Value{{{1, 1}}}) == EisensteinImage{0, 1});
  CHECK(s0_separate(S0Value{{{1, 1}, {-1, 1}}}) == EisensteinImage{1, 0});
  const auto x = s0_separate(S0Value{{{1, 1}}});
  const auto y = s0_separate(S0Value{{{-1, 1}}});
  CHECK(x * y == EisensteinImage{1, 0});
  CHECK(x + y == EisensteinImage{1, 0});
  // zeta is a primitive sixth root of unity.
  CHECK(EisensteinImage::zeta_power(6) == EisensteinImage{1, 0});
  CHECK(EisensteinImage::zeta_power(3) == EisensteinImage{-1, 0});
  CHECK(EisensteinImage::zeta_power(-1) == EisensteinImage{1, -1});
  CHECK(EisensteinImage{2, 1}.norm() == 7);
}

TEST_CASE("s0_separate is a homomorphism") {
  auto r = R("s0");
  Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    const auto a = r->sample(rng);
    const auto b = r->sample(rng);
    const auto& av = a.as<S0Value>();
    const auto& bv = b.as<S0Value>();
    CHECK(s0_separate(s0_add(av, bv)) == s0_separate(av) + s0_separate(bv));
    CHECK(s0_separate(s0_mul(av, bv)) == s0_separate(av) * s0_separate(bv));
  }
}

TEST_CASE("random rewrite walks are recognised as Equal with replayable traces") {
  Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    const S0Terms a = random_raw(rng);
    const S0Terms b = random_walk(a, rng, static_cast<int>(uniform_int(rng, 1, 25)));
    auto res = s0_eq(S0Value{a}, S0Value{b});
    REQUIRE(res.verdict == Verdict::Equal);
    CHECK(s0_replay(a, res.trace, b));
  }
}

TEST_CASE("nonzero elements with equal images are connected") {
  Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    const S0Terms a = random_raw(rng, 6, 6, 5);
    const S0Terms b = representative(s0_separate(S0Value{a}));
    auto res = s0_eq(S0Value{a}, S0Value{b});
    CAPTURE(i);
    REQUIRE(res.verdict == Verdict::Equal);
    CHECK(s0_replay(a, res.trace, b));
  }
}

TEST_CASE("s0_replay rejects inapplicable and wrong traces") {
  const S0Terms one{{0, 1}};
  CHECK_FALSE(s0_replay(one, {{RewriteKind::Contract, 0}}, one));
  CHECK(s0_replay(one, {{RewriteKind::Expand, 0}}, S0Terms{{1, 1}, {-1, 1}}));
  CHECK_FALSE(s0_replay(one, {{RewriteKind::Expand, 0}}, one));
  CHECK_FALSE(s0_apply(one, {RewriteKind::Expand, 5}).has_value());
}

TEST_CASE("s0 semiring") {
  auto r = R("s0");
  const auto x = lit(r, "x");
  const auto y = lit(r, "y");
  CHECK(x == S0Semiring::monomial(1));
  CHECK(y == S0Semiring::monomial(-1));
  CHECK(r->eq(r->add(x, y), r->one()) == Verdict::Equal);
  CHECK(r->eq(r->mul(x, y), r->one()) == Verdict::Equal);
  CHECK(r->eq(r->add(r->mul(x, x), r->one()), x) == Verdict::Equal);
  CHECK(r->eq(x, r->one()) == Verdict::Distinct);
  // x^6 = 1: the unit group is the six classes of x^k.
  const auto x6 = S0Semiring::monomial(6);
  CHECK(r->eq(x6, r->one()) == Verdict::Equal);
  auto u = r->is_unit(S0Semiring::monomial(4));
  REQUIRE(u.status == UnitStatus::Unit);
  CHECK(r->eq(r->mul(S0Semiring::monomial(4), *u.inverse), r->one()) == Verdict::Equal);
  CHECK(r->render_literal(Element(S0Value{{{2, 1}, {1, 2}, {0, 1}, {-1, 1}, {-2, 3}}})) == "x^2+2*x+1+y+3*y^2");
}

TEST_CASE("s0 multiplication laws on samples") {
  auto r = R("s0");
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto a = r->sample(rng), b = r->sample(rng), c = r->sample(rng);
    CHECK(r->eq(r->mul(a, b), r->mul(b, a)) == Verdict::Equal);
    CHECK(r->eq(r->mul(r->mul(a, b), c), r->mul(a, r->mul(b, c))) == Verdict::Equal);
  }
}

TEST_CASE("s0 is_unit soundness") {
  auto r = R("s0");
  Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    const auto a = r->sample(rng);
    const auto u = r->is_unit(a);
    CHECK(u.status != UnitStatus::Unknown);
    if (u.inverse) CHECK(r->eq(r->mul(a, *u.inverse), r->one()) == Verdict::Equal);
    const auto n = s0_separate(a.as<S0Value>()).norm();
    if (n != 1) CHECK(u.status == UnitStatus::NonUnit);
  }
}
