#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "nonufd/semiring.hpp"

namespace nonufd {

/// Dense univariate polynomial over one semiring; index i holds the
/// coefficient of T^i. Trailing zeros are trimmed, so the zero polynomial
/// is empty and has no degree.
class Polynomial {
 public:
  explicit Polynomial(SemiringRef r);
  /// Throws UsageError if a coefficient belongs to another semiring.
  Polynomial(SemiringRef r, std::vector<Element> coeffs);

  static Polynomial constant(SemiringRef r, Element c);
  static Polynomial monomial(SemiringRef r, Element c, std::size_t power);
  /// Coefficients given as naturals, lowest power first, mapped by from_natural.
  static Polynomial from_naturals(SemiringRef r, std::initializer_list<unsigned long> coeffs);
  static Polynomial from_naturals(SemiringRef r, std::span<const unsigned long> coeffs);

  const Semiring& semiring() const noexcept { return *semiring_; }
  const SemiringRef& semiring_ref() const noexcept { return semiring_; }
  std::string_view semiring_id() const { return semiring_->id(); }

  std::span<const Element> coefficients() const noexcept { return coeffs_; }
  /// Zero beyond the degree.
  const Element& coefficient(std::size_t i) const;
  /// Throws UsageError on the zero polynomial.
  const Element& leading() const;

  std::optional<std::size_t> degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const;

  /// Structural identity (same semiring id, identical payloads).
  bool operator==(const Polynomial& o) const;

 private:
  void trim();

  SemiringRef semiring_;
  std::vector<Element> coeffs_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_scale(const Element& c, const Polynomial& p);
Polynomial poly_pow(const Polynomial& p, std::size_t k);
Verdict poly_eq(const Polynomial& p, const Polynomial& q);
Element poly_eval(const Polynomial& p, const Element& v);

/// Whether p * q is the constant one. For nonzero inputs over a semiring
/// without zero divisors this is false as soon as either has degree >= 1.
bool poly_units_check(const Polynomial& p, const Polynomial& q);

/// Order by degree, then coefficients from T^0 upward by structural order.
int poly_compare(const Polynomial& p, const Polynomial& q);

struct PolynomialLess {
  bool operator()(const Polynomial& p, const Polynomial& q) const { return poly_compare(p, q) < 0; }
};

/// Throws UsageError unless p and q share a semiring id.
void require_same_semiring(const Polynomial& p, const Polynomial& q);

}  // namespace nonufd
