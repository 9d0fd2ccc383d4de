#include "nonufd/semirings.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "nonufd/errors.hpp"

namespace nonufd {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::optional<mpz_class> parse_natural(std::string_view text) {
  if (!all_digits(text)) return std::nullopt;
  return mpz_class(std::string(text), 10);
}

Verdict exact(bool same) { return same ? Verdict::Equal : Verdict::Distinct; }

// Helper for the "inner(...)" literal forms t(r) and m(q).
std::optional<std::string_view> unwrap_call(std::string_view text, char head) {
  if (text.size() < 4 || text[0] != head || text[1] != '(' || text.back() != ')') return std::nullopt;
  return text.substr(2, text.size() - 3);
}

}  // namespace

std::optional<mpq_class> parse_rational(std::string_view text, bool allow_negative) {
  bool negative = false;
  if (allow_negative && !text.empty() && text[0] == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const auto num = parse_natural(text.substr(0, slash));
  if (!num) return std::nullopt;
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    const auto d = parse_natural(text.substr(slash + 1));
    if (!d || *d == 0) return std::nullopt;
    den = *d;
  }
  mpq_class q(*num, den);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string render_rational(const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

// ---------------------------------------------------------------- nat

NatSemiring::NatSemiring() : Semiring(make(0), make(1)) {}

Element NatSemiring::make(const mpz_class& n) {
  if (n < 0) throw UsageError("natural numbers are nonnegative");
  return NatValue{n};
}

Element NatSemiring::add(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  return NatValue{a.as<NatValue>().value + b.as<NatValue>().value};
}

Element NatSemiring::mul(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  return NatValue{a.as<NatValue>().value * b.as<NatValue>().value};
}

Verdict NatSemiring::eq(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  return exact(a == b);
}

Element NatSemiring::from_natural(const mpz_class& n) const { return make(n); }

UnitResult NatSemiring::is_unit(const Element& a) const {
  require_own(a);
  return is_one(a) ? UnitResult::unit(one()) : UnitResult::non_unit();
}

OnePartner NatSemiring::one_partner() const {
  // The only unit is 1, and 1 + 1 = 2.
  const bool holds = eq(add(one(), one()), one()) == Verdict::Equal;
  if (holds) return verified_partner(*this, {PartnerStatus::Present, one(), one(), "1 + 1 = 1"});
  return {PartnerStatus::Absent, std::nullopt, std::nullopt,
          "units of N are {1} and 1 + 1 = 2 != 1"};
}

Element NatSemiring::sample(Rng& rng) const {
  const auto pick = uniform_int(rng, 0, 15);
  if (pick == 0) return zero();
  if (pick == 1) {
    mpz_class big = 1;
    big <<= 70;
    return make(big + static_cast<unsigned long>(uniform_int(rng, 0, 1000)));
  }
  return make(static_cast<unsigned long>(uniform_int(rng, 1, 40)));
}

std::optional<Element> NatSemiring::parse_literal(std::string_view text) const {
  if (auto n = parse_natural(text)) return make(*n);
  return std::nullopt;
}

std::string NatSemiring::render_literal(const Element& a) const {
  require_own(a);
  return a.as<NatValue>().value.get_str();
}

// ---------------------------------------------------------------- nonneg-rational

NonNegRationalSemiring::NonNegRationalSemiring() : Semiring(make(0), make(1)) {}

Element NonNegRationalSemiring::make(const mpq_class& q) {
  if (q < 0) throw UsageError("nonneg-rational values are nonnegative");
  mpq_class c = q;
  c.canonicalize();
  return NonNegRationalValue{c};
}

Element NonNegRationalSemiring::add(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  return NonNegRationalValue{mpq_class(a.as<NonNegRationalValue>().value + b.as<NonNegRationalValue>().value)};
}

Element NonNegRationalSemiring::mul(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  return NonNegRationalValue{mpq_class(a.as<NonNegRationalValue>().value * b.as<NonNegRationalValue>().value)};
}

Verdict NonNegRationalSemiring::eq(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  return exact(a == b);
}

Element NonNegRationalSemiring::from_natural(const mpz_class& n) const { return make(mpq_class(n)); }

UnitResult NonNegRationalSemiring::is_unit(const Element& a) const {
  require_own(a);
  const mpq_class& q = a.as<NonNegRationalValue>().value;
  if (q == 0) return UnitResult::non_unit();
  return UnitResult::unit(make(mpq_class(1) / q));
}

OnePartner NonNegRationalSemiring::one_partner() const {
  // a + 1/a = 1 means a^2 - a + 1 = 0. By the rational root theorem the only
  // nonnegative candidate is 1; evaluate the quadratic there.
  for (const mpq_class& candidate : {mpq_class(1)}) {
    if (candidate * candidate - candidate + 1 == 0) {
      const Element a = make(candidate);
      return verified_partner(*this, {PartnerStatus::Present, a, *is_unit(a).inverse, "rational root"});
    }
  }
  return {PartnerStatus::Absent, std::nullopt, std::nullopt,
          "a + 1/a = 1 forces a^2 - a + 1 = 0; the only rational root candidate 1 gives 1, "
          "and the discriminant -3 is negative"};
}

Element NonNegRationalSemiring::sample(Rng& rng) const {
  if (uniform_int(rng, 0, 7) == 0) return zero();
  const auto p = uniform_int(rng, 1, 30);
  const auto q = uniform_int(rng, 1, 12);
  return make(mpq_class(static_cast<long>(p), static_cast<unsigned long>(q)));
}

std::optional<Element> NonNegRationalSemiring::parse_literal(std::string_view text) const {
  if (auto q = parse_rational(text, false)) return make(*q);
  return std::nullopt;
}

std::string NonNegRationalSemiring::render_literal(const Element& a) const {
  require_own(a);
  return render_rational(a.as<NonNegRationalValue>().value);
}

// ---------------------------------------------------------------- boolean

BooleanSemiring::BooleanSemiring() : Semiring(make(false), make(true)) {}

Element BooleanSemiring::make(bool bit) { return BooleanValue{bit}; }

Element BooleanSemiring::add(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  return make(a.as<BooleanValue>().bit || b.as<BooleanValue>().bit);
}

Element BooleanSemiring::mul(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  return make(a.as<BooleanValue>().bit && b.as<BooleanValue>().bit);
}

Verdict BooleanSemiring::eq(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  return exact(a == b);
}

Element BooleanSemiring::from_natural(const mpz_class& n) const { return make(n > 0); }

UnitResult BooleanSemiring::is_unit(const Element& a) const {
  require_own(a);
  return is_one(a) ? UnitResult::unit(one()) : UnitResult::non_unit();
}

OnePartner BooleanSemiring::one_partner() const {
  return verified_partner(*this, {PartnerStatus::Present, one(), one(), "1 + 1 = 1 by idempotency"});
}

Element BooleanSemiring::sample(Rng& rng) const { return make(uniform_int(rng, 0, 3) != 0); }

std::optional<Element> BooleanSemiring::parse_literal(std::string_view text) const {
  if (auto n = parse_natural(text)) return from_natural(*n);
  return std::nullopt;
}

std::string BooleanSemiring::render_literal(const Element& a) const {
  require_own(a);
  return a.as<BooleanValue>().bit ? "1" : "0";
}

// ---------------------------------------------------------------- tropical

TropicalSemiring::TropicalSemiring() : Semiring(infinity(), finite(0)) {}

Element TropicalSemiring::finite(const mpq_class& t) {
  mpq_class c = t;
  c.canonicalize();
  return TropicalValue{c};
}

Element TropicalSemiring::infinity() { return TropicalValue{std::nullopt}; }

Element TropicalSemiring::add(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  const auto& x = a.as<TropicalValue>().value;
  const auto& y = b.as<TropicalValue>().value;
  if (!x) return b;
  if (!y) return a;
  return *x <= *y ? a : b;
}

Element TropicalSemiring::mul(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  const auto& x = a.as<TropicalValue>().value;
  const auto& y = b.as<TropicalValue>().value;
  if (!x || !y) return infinity();
  return TropicalValue{mpq_class(*x + *y)};
}

Verdict TropicalSemiring::eq(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  return exact(a == b);
}

Element TropicalSemiring::from_natural(const mpz_class& n) const { return n == 0 ? zero() : one(); }

UnitResult TropicalSemiring::is_unit(const Element& a) const {
  require_own(a);
  const auto& x = a.as<TropicalValue>().value;
  if (!x) return UnitResult::non_unit();
  return UnitResult::unit(finite(-*x));
}

OnePartner tropical_one_partner() {
  const Element one = TropicalSemiring::finite(0);
  return {PartnerStatus::Present, one, one, "min(0, 0) = 0: the tropical one is its own partner"};
}

OnePartner TropicalSemiring::one_partner() const { return verified_partner(*this, tropical_one_partner()); }

Element TropicalSemiring::sample(Rng& rng) const {
  if (uniform_int(rng, 0, 7) == 0) return zero();
  const auto p = uniform_int(rng, -20, 20);
  const auto q = uniform_int(rng, 1, 6);
  return finite(mpq_class(static_cast<long>(p), static_cast<unsigned long>(q)));
}

std::optional<Element> TropicalSemiring::parse_literal(std::string_view text) const {
  if (text == "tinf") return zero();
  if (auto inner = unwrap_call(text, 't')) {
    if (auto q = parse_rational(*inner, true)) return finite(*q);
    return std::nullopt;
  }
  if (auto n = parse_natural(text)) return from_natural(*n);
  return std::nullopt;
}

std::string TropicalSemiring::render_literal(const Element& a) const {
  require_own(a);
  const auto& x = a.as<TropicalValue>().value;
  return x ? "t(" + render_rational(*x) + ")" : "tinf";
}

// ---------------------------------------------------------------- monoid-nat

MonoidNatValue monoid_mul(const MonoidNatValue& a, const MonoidNatValue& b) {
  MonoidNatValue out;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      out.terms[mpq_class(ea * eb)] += ca * cb;
    }
  }
  return out;
}

std::optional<MonoidNatValue> monoid_units(const MonoidNatValue& a) {
  if (a.terms.size() != 1 || a.terms.begin()->second != 1) return std::nullopt;
  MonoidNatValue inv;
  inv.terms.emplace(mpq_class(1 / a.terms.begin()->first), mpz_class(1));
  return inv;
}

mpz_class monoid_mass(const MonoidNatValue& a) {
  mpz_class mass = 0;
  for (const auto& [e, c] : a.terms) mass += c;
  return mass;
}

MonoidNatSemiring::MonoidNatSemiring() : Semiring(MonoidNatValue{}, term(1)) {}

Element MonoidNatSemiring::term(const mpq_class& exponent, const mpz_class& coeff) {
  if (exponent <= 0) throw UsageError("monoid-nat exponents are positive rationals");
  if (coeff < 0) throw UsageError("monoid-nat coefficients are naturals");
  MonoidNatValue v;
  mpq_class e = exponent;
  e.canonicalize();
  if (coeff != 0) v.terms.emplace(e, coeff);
  return v;
}

Element MonoidNatSemiring::add(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  MonoidNatValue out = a.as<MonoidNatValue>();
  for (const auto& [e, c] : b.as<MonoidNatValue>().terms) out.terms[e] += c;
  return out;
}

Element MonoidNatSemiring::mul(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  return monoid_mul(a.as<MonoidNatValue>(), b.as<MonoidNatValue>());
}

Verdict MonoidNatSemiring::eq(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  return exact(a == b);
}

Element MonoidNatSemiring::from_natural(const mpz_class& n) const { return term(1, n); }

UnitResult MonoidNatSemiring::is_unit(const Element& a) const {
  require_own(a);
  if (auto inv = monoid_units(a.as<MonoidNatValue>())) return UnitResult::unit(Element(*inv));
  return UnitResult::non_unit();
}

OnePartner MonoidNatSemiring::one_partner() const {
  // mass is a homomorphism onto N; units have mass 1, so a + a^-1 has mass 2.
  const mpz_class one_mass = monoid_mass(one().as<MonoidNatValue>());
  const mpz_class unit_mass = 1;
  if (unit_mass + unit_mass == one_mass) {
    throw std::logic_error("coefficient-mass argument does not apply");
  }
  return {PartnerStatus::Absent, std::nullopt, std::nullopt,
          "coefficient mass is a homomorphism to N; units have mass 1, so a + a^-1 has mass 2 "
          "while 1 has mass 1"};
}

Element MonoidNatSemiring::sample(Rng& rng) const {
  if (uniform_int(rng, 0, 7) == 0) return zero();
  MonoidNatValue v;
  const auto n = uniform_int(rng, 1, 3);
  for (std::int64_t i = 0; i < n; ++i) {
    mpq_class e(static_cast<long>(uniform_int(rng, 1, 6)), static_cast<unsigned long>(uniform_int(rng, 1, 4)));
    e.canonicalize();
    v.terms[e] += static_cast<unsigned long>(uniform_int(rng, 1, 3));
  }
  return v;
}

std::optional<Element> MonoidNatSemiring::parse_literal(std::string_view text) const {
  if (auto inner = unwrap_call(text, 'm')) {
    auto q = parse_rational(*inner, false);
    if (!q || *q == 0) return std::nullopt;
    return term(*q);
  }
  if (auto n = parse_natural(text)) return from_natural(*n);
  return std::nullopt;
}

std::string MonoidNatSemiring::render_literal(const Element& a) const {
  require_own(a);
  const auto& terms = a.as<MonoidNatValue>().terms;
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += '+';
    if (it->second != 1) out += it->second.get_str() + "*";
    out += "m(" + render_rational(it->first) + ")";
  }
  return out;
}

std::optional<Element> MonoidNatSemiring::unit_quotient(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  const auto& ta = a.as<MonoidNatValue>().terms;
  const auto& tb = b.as<MonoidNatValue>().terms;
  if (ta.empty() && tb.empty()) return one();
  if (ta.size() != tb.size() || ta.empty()) return std::nullopt;
  // A unit m(u) scales every exponent by u, preserving order.
  Element u = term(mpq_class(ta.begin()->first / tb.begin()->first));
  if (mul(u, b) == a) return u;
  return std::nullopt;
}

}  // namespace nonufd
