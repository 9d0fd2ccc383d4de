#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nonufd/poly.hpp"

namespace nonufd {

enum class CertVerdict { Irreducible, Reducible, Unknown };
enum class CertReason { Lemma1, Lemma2, Lemma3, ExhaustiveSearch, Budget };

std::string_view to_string(CertVerdict v);
std::string_view to_string(CertReason r);

struct IrreducibilityCertificate {
  Polynomial target;
  CertVerdict verdict = CertVerdict::Unknown;
  CertReason reason = CertReason::Budget;
  /// Two nonconstant factors whose product is Equal to target (Reducible only).
  std::optional<std::pair<Polynomial, Polynomial>> witness;
  /// Proof skeleton, one constraint or deduction per line.
  std::vector<std::string> argument;
};

/// T^n + a for a unit a over a strict semiring without zero divisors.
/// Throws PreconditionError when n == 0, a is not a certified unit, or the
/// semiring does not claim strictness and zero-divisor-freeness.
IrreducibilityCertificate cert_binomial(const SemiringRef& r, std::size_t n, const Element& a);

/// T^2 + T + 1: split as (T + a)(T + a^-1) iff a one-partner exists.
IrreducibilityCertificate cert_quadratic(const SemiringRef& r);

/// T^4 + T^2 + 1: split as (T^2 + a)(T^2 + a^-1) iff a one-partner exists.
IrreducibilityCertificate cert_quartic(const SemiringRef& r);

/// The lemma certificate that applies to p's shape, if any: monic binomial
/// with a unit constant term, T^2+T+1, or T^4+T^2+1.
std::optional<IrreducibilityCertificate> certify_by_shape(const Polynomial& p);

struct SplitOptions {
  unsigned long bound = 4;
  /// Over N, restrict to monic factors of a monic target.
  bool monic_only = true;
};

/// Every pair (q, r), q <= r by poly_compare, of nonconstant polynomials with
/// coefficients in [0, bound] and q * r Equal to p. Exhaustive within the
/// bound. Needs coefficients_enumerable_bounded (N, Boolean); throws
/// UnsupportedError otherwise and PreconditionError for degree < 2.
std::vector<std::pair<Polynomial, Polynomial>> brute_force_split(const Polynomial& p,
                                                                 const SplitOptions& opts = {});

/// Irreducible (exhaustive-search) or Reducible with the first split found.
IrreducibilityCertificate cert_exhaustive(const Polynomial& p, const SplitOptions& opts = {});

struct Factorization {
  Element unit;
  std::vector<Polynomial> factors;  // nonconstant
  Polynomial product;               // unit * prod(factors)

  /// Throws PreconditionError for a non-unit scalar or a constant factor.
  static Factorization make(const SemiringRef& r, Element unit, std::vector<Polynomial> factors);
  /// Unit one; `factors` must be nonempty.
  static Factorization make(std::vector<Polynomial> factors);

  std::vector<std::size_t> degree_multiset() const;
};

/// All factorizations of p into irreducibles within the coefficient bound,
/// factors sorted, deduplicated up to order. Requires the same capability as
/// brute_force_split; over N the target must be monic. Degree 0 throws
/// PreconditionError.
std::vector<Factorization> all_factorizations(const Polynomial& p, const SplitOptions& opts = {});

/// Equal iff some bijection of factors matches each pair up to a unit
/// scalar. Degree multisets are compared first. Unknown coefficient
/// equalities propagate as Unknown.
Verdict factorization_equiv(const Factorization& f, const Factorization& g);

}  // namespace nonufd
