#include <doctest.h>

#include "support.hpp"

using namespace testsupport;

TEST_CASE("add") {
  auto nat = R("nat");
  CHECK(nat->add(nat->from_natural(2ul), nat->from_natural(3ul)) == nat->from_natural(5ul));
  auto b = R("boolean");
  CHECK(b->add(b->one(), b->one()) == b->one());
  auto t = R("tropical");
  CHECK(t->add(lit(t, "t(3)"), lit(t, "t(5)")) == lit(t, "t(3)"));
}

TEST_CASE("mul") {
  auto nat = R("nat");
  CHECK(nat->mul(nat->from_natural(2ul), nat->from_natural(3ul)) == nat->from_natural(6ul));
  auto t = R("tropical");
  CHECK(t->mul(lit(t, "t(3)"), lit(t, "t(5)")) == lit(t, "t(8)"));
  auto s0 = R("s0");
  CHECK(s0->eq(s0->mul(lit(s0, "x"), lit(s0, "y")), s0->one()) == Verdict::Equal);
}

TEST_CASE("eq is three-valued") {
  auto nat = R("nat");
  CHECK(nat->eq(nat->from_natural(5ul), nat->from_natural(5ul)) == Verdict::Equal);
  CHECK(nat->eq(nat->from_natural(5ul), nat->from_natural(4ul)) == Verdict::Distinct);
  auto s0 = R("s0");
  CHECK(s0->eq(S0Semiring::from_terms({{1, 1}, {-1, 1}}), s0->one()) == Verdict::Equal);
  CHECK(s0->eq(lit(s0, "x"), s0->one()) == Verdict::Distinct);
}

TEST_CASE("cross-semiring operations are usage errors") {
  auto nat = R("nat");
  auto b = R("boolean");
  CHECK_THROWS_AS(nat->add(nat->one(), b->one()), UsageError);
  CHECK_THROWS_AS(nat->mul(b->one(), nat->one()), UsageError);
  CHECK_THROWS_AS(nat->eq(nat->one(), b->one()), UsageError);
  CHECK_THROWS_AS((void)b->one().as<NatValue>(), UsageError);
}

TEST_CASE("from_natural") {
  auto nat = R("nat");
  CHECK(nat->from_natural(3ul) == NatSemiring::make(3));
  auto b = R("boolean");
  CHECK(b->from_natural(3ul) == b->one());
  CHECK(b->from_natural(0ul) == b->zero());
  auto t = R("tropical");
  CHECK(t->from_natural(3ul) == TropicalSemiring::finite(0));
  CHECK(t->from_natural(0ul) == TropicalSemiring::infinity());
  for (const auto& id : all_ids()) {
    auto r = R(id);
    CAPTURE(id);
    CHECK(r->eq(r->from_natural(0ul), r->zero()) == Verdict::Equal);
    CHECK(r->eq(r->from_natural(1ul), r->one()) == Verdict::Equal);
  }
}

TEST_CASE("is_unit returns checked inverses") {
  auto nat = R("nat");
  auto u = nat->is_unit(nat->one());
  REQUIRE(u.status == UnitStatus::Unit);
  CHECK(*u.inverse == nat->one());
  CHECK(nat->is_unit(nat->from_natural(2ul)).status == UnitStatus::NonUnit);
  CHECK(nat->is_unit(nat->zero()).status == UnitStatus::NonUnit);

  auto t = R("tropical");
  for (const char* s : {"t(0)", "t(3)", "t(-7/2)"}) {
    auto v = t->is_unit(lit(t, s));
    REQUIRE(v.status == UnitStatus::Unit);
    CHECK(t->mul(lit(t, s), *v.inverse) == t->one());
  }
  CHECK(*t->is_unit(lit(t, "t(3)")).inverse == lit(t, "t(-3)"));
  CHECK(t->is_unit(t->zero()).status == UnitStatus::NonUnit);

  auto s0 = R("s0");
  auto x = s0->is_unit(lit(s0, "x"));
  REQUIRE(x.status == UnitStatus::Unit);
  CHECK(s0->eq(*x.inverse, lit(s0, "y")) == Verdict::Equal);
  CHECK(s0->is_unit(s0->from_natural(2ul)).status == UnitStatus::NonUnit);
  CHECK(s0->is_unit(s0->zero()).status == UnitStatus::NonUnit);
}

TEST_CASE("one_partner") {
  auto s0 = R("s0");
  auto p = s0->one_partner();
  REQUIRE(p.present());
  CHECK(*p.a == lit(s0, "x"));
  CHECK(*p.a_inv == lit(s0, "y"));

  auto b = R("boolean");
  auto pb = b->one_partner();
  REQUIRE(pb.present());
  CHECK(*pb.a == b->one());
  CHECK(*pb.a_inv == b->one());

  for (const char* id : {"nat", "nonneg-rational", "monoid-nat"}) {
    CAPTURE(id);
    auto q = R(id)->one_partner();
    CHECK(q.status == PartnerStatus::Absent);
    CHECK_FALSE(q.argument.empty());
  }
}

TEST_CASE("one_partner witnesses satisfy both equations") {
  for (const auto& id : all_ids()) {
    auto r = R(id);
    auto p = r->one_partner();
    if (!p.present()) continue;
    CAPTURE(id);
    CHECK(r->eq(r->mul(*p.a, *p.a_inv), r->one()) == Verdict::Equal);
    CHECK(r->eq(r->add(*p.a, *p.a_inv), r->one()) == Verdict::Equal);
  }
}

TEST_CASE("verified_partner rejects a false witness") {
  auto nat = R("nat");
  OnePartner bogus{PartnerStatus::Present, nat->one(), nat->one(), "1 + 1 = 1"};
  CHECK_THROWS_AS(verified_partner(*nat, bogus), std::logic_error);
}

TEST_CASE("check_axioms examples") {
  auto nat = check_axioms(*R("nat"), 0, 1000);
  CHECK(nat.passed());
  CHECK(nat.results.size() == 10);
  auto trop = check_axioms(*R("tropical"), 0, 1000);
  CHECK(trop.passed());
  REQUIRE(trop.find("strictness") != nullptr);
  CHECK(trop.find("strictness")->checked == 1000);
  auto s0 = check_axioms(*R("s0"), 0, 200);
  CHECK(s0.passed());
  CHECK(s0.unknown_total() == 0);
}

TEST_CASE("check_axioms is deterministic and needs samples") {
  auto r = R("monoid-nat");
  CHECK(check_axioms(*r, 7, 300).render_text() == check_axioms(*r, 7, 300).render_text());
  CHECK(check_axioms(*r, 7, 300).digest() == check_axioms(*r, 7, 300).digest());
  CHECK_THROWS_AS(check_axioms(*r, 0, 0), PreconditionError);
}

TEST_CASE("registry") {
  const Registry& reg = default_registry();
  std::vector<std::string> ids;
  for (const auto& r : reg.all()) ids.emplace_back(r->id());
  CHECK(ids == all_ids());
  CHECK(reg.find("tropical")->id() == "tropical-min-plus");
  CHECK(reg.find("nope") == nullptr);
  CHECK_THROWS_AS(reg.get("nope"), UsageError);

  Registry local;
  local.add(std::make_shared<NatSemiring>());
  CHECK_THROWS_AS(local.add(std::make_shared<NatSemiring>()), UsageError);
}

TEST_CASE("descriptors are nontrivial and flag equality completeness") {
  for (const auto& id : all_ids()) {
    auto r = R(id);
    CAPTURE(id);
    CHECK(r->eq(r->zero(), r->one()) == Verdict::Distinct);
    CHECK(r->capabilities().equality_complete == (id != "s0"));
    CHECK(r->zero().semiring_id() == id);
    CHECK(r->one().semiring_id() == id);
  }
}
