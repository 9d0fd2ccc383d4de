#pragma once

// Concrete exact semirings. R>=0 and R>0 are realized by their rational
// sub-semirings so that equality stays exact and decidable.

#include <optional>

#include "nonufd/semiring.hpp"

namespace nonufd {

/// The natural numbers with arbitrary precision.
class NatSemiring final : public Semiring {
 public:
  NatSemiring();
  std::string_view id() const override { return ids::kNat; }
  Capabilities capabilities() const override { return {true, true, true}; }
  Element add(const Element& a, const Element& b) const override;
  Element mul(const Element& a, const Element& b) const override;
  Verdict eq(const Element& a, const Element& b) const override;
  using Semiring::from_natural;
  Element from_natural(const mpz_class& n) const override;
  UnitResult is_unit(const Element& a) const override;
  OnePartner one_partner() const override;
  Element sample(Rng& rng) const override;
  std::optional<Element> parse_literal(std::string_view text) const override;
  std::string render_literal(const Element& a) const override;

  static Element make(const mpz_class& n);
};

/// Nonnegative rationals, standing in for R>=0.
class NonNegRationalSemiring final : public Semiring {
 public:
  NonNegRationalSemiring();
  std::string_view id() const override { return ids::kNonNegRational; }
  Capabilities capabilities() const override { return {false, false, true}; }
  Element add(const Element& a, const Element& b) const override;
  Element mul(const Element& a, const Element& b) const override;
  Verdict eq(const Element& a, const Element& b) const override;
  using Semiring::from_natural;
  Element from_natural(const mpz_class& n) const override;
  UnitResult is_unit(const Element& a) const override;
  OnePartner one_partner() const override;
  Element sample(Rng& rng) const override;
  std::optional<Element> parse_literal(std::string_view text) const override;
  std::string render_literal(const Element& a) const override;

  /// Throws UsageError for negative values.
  static Element make(const mpq_class& q);
};

/// {0, 1} with or as addition and and as multiplication.
class BooleanSemiring final : public Semiring {
 public:
  BooleanSemiring();
  std::string_view id() const override { return ids::kBoolean; }
  Capabilities capabilities() const override { return {true, true, true}; }
  Element add(const Element& a, const Element& b) const override;
  Element mul(const Element& a, const Element& b) const override;
  Verdict eq(const Element& a, const Element& b) const override;
  using Semiring::from_natural;
  Element from_natural(const mpz_class& n) const override;
  UnitResult is_unit(const Element& a) const override;
  OnePartner one_partner() const override;
  Element sample(Rng& rng) const override;
  std::optional<Element> parse_literal(std::string_view text) const override;
  std::string render_literal(const Element& a) const override;

  static Element make(bool bit);
};

/// Min-plus semifield over Q plus +infinity. The multiplicative one is the
/// number 0, written t(0); the additive zero is tinf.
class TropicalSemiring final : public Semiring {
 public:
  TropicalSemiring();
  std::string_view id() const override { return ids::kTropical; }
  Capabilities capabilities() const override { return {false, false, true}; }
  Element add(const Element& a, const Element& b) const override;
  Element mul(const Element& a, const Element& b) const override;
  Verdict eq(const Element& a, const Element& b) const override;
  using Semiring::from_natural;
  Element from_natural(const mpz_class& n) const override;
  UnitResult is_unit(const Element& a) const override;
  OnePartner one_partner() const override;
  Element sample(Rng& rng) const override;
  std::optional<Element> parse_literal(std::string_view text) const override;
  std::string render_literal(const Element& a) const override;

  static Element finite(const mpq_class& t);
  static Element infinity();
};

/// The monoid semiring N[Q>0]: finite N-combinations of positive rationals,
/// multiplied by convolution over the multiplicative monoid (Q>0, *).
class MonoidNatSemiring final : public Semiring {
 public:
  MonoidNatSemiring();
  std::string_view id() const override { return ids::kMonoidNat; }
  Capabilities capabilities() const override { return {false, false, true}; }
  Element add(const Element& a, const Element& b) const override;
  Element mul(const Element& a, const Element& b) const override;
  Verdict eq(const Element& a, const Element& b) const override;
  using Semiring::from_natural;
  Element from_natural(const mpz_class& n) const override;
  UnitResult is_unit(const Element& a) const override;
  OnePartner one_partner() const override;
  Element sample(Rng& rng) const override;
  std::optional<Element> parse_literal(std::string_view text) const override;
  std::string render_literal(const Element& a) const override;
  std::optional<Element> unit_quotient(const Element& a, const Element& b) const override;

  /// Single term coeff * m(exponent). Zero coefficients give the zero element.
  static Element term(const mpq_class& exponent, const mpz_class& coeff = 1);
};

MonoidNatValue monoid_mul(const MonoidNatValue& a, const MonoidNatValue& b);
/// Inverse iff `a` is a single term with coefficient 1.
std::optional<MonoidNatValue> monoid_units(const MonoidNatValue& a);
/// Total coefficient sum; a semiring homomorphism N[Q>0] -> N.
mpz_class monoid_mass(const MonoidNatValue& a);

OnePartner tropical_one_partner();

/// Parses "p" or "p/q" with optional leading '-' when `allow_negative`.
std::optional<mpq_class> parse_rational(std::string_view text, bool allow_negative);
std::string render_rational(const mpq_class& q);

}  // namespace nonufd
