#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "nonufd/element.hpp"
#include "nonufd/verdict.hpp"

namespace nonufd {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]. Plain modulo keeps sample streams identical
/// across standard libraries, which matters for byte-stable reports.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

struct Capabilities {
  bool units_enumerable = false;
  bool coefficients_enumerable_bounded = false;
  bool equality_complete = true;
};

/// Registration-time claims backed by the sampled axiom harness.
struct StructureClaims {
  bool strict = true;
  bool zero_divisor_free = true;
};

enum class UnitStatus { Unit, NonUnit, Unknown };

struct UnitResult {
  UnitStatus status = UnitStatus::NonUnit;
  std::optional<Element> inverse;  // set iff status == Unit

  static UnitResult unit(Element inverse) { return {UnitStatus::Unit, std::move(inverse)}; }
  static UnitResult non_unit() { return {UnitStatus::NonUnit, std::nullopt}; }
  static UnitResult unknown() { return {UnitStatus::Unknown, std::nullopt}; }
};

enum class PartnerStatus { Present, Absent, Unknown };

/// A unit a with a + a^-1 = 1, or the argument that none exists.
struct OnePartner {
  PartnerStatus status = PartnerStatus::Absent;
  std::optional<Element> a;
  std::optional<Element> a_inv;
  std::string argument;

  bool present() const noexcept { return status == PartnerStatus::Present; }
};

/// A commutative semiring with exact, canonical element payloads.
///
/// Descriptors are immutable once constructed and every operation is a pure
/// function of its arguments, so a descriptor can be shared across threads.
/// Binary operations reject elements of other semirings with UsageError.
class Semiring {
 public:
  Semiring(Element zero, Element one) : zero_(std::move(zero)), one_(std::move(one)) {}
  virtual ~Semiring() = default;

  Semiring(const Semiring&) = delete;
  Semiring& operator=(const Semiring&) = delete;

  virtual std::string_view id() const = 0;
  virtual Capabilities capabilities() const = 0;
  virtual StructureClaims claims() const { return {}; }

  const Element& zero() const noexcept { return zero_; }
  const Element& one() const noexcept { return one_; }

  virtual Element add(const Element& a, const Element& b) const = 0;
  virtual Element mul(const Element& a, const Element& b) const = 0;
  virtual Verdict eq(const Element& a, const Element& b) const = 0;

  /// Image of n under the unique homomorphism N -> R (n-fold sum of one).
  virtual Element from_natural(const mpz_class& n) const = 0;
  Element from_natural(unsigned long n) const { return from_natural(mpz_class(n)); }

  /// Returns the checked inverse when `a` is a unit.
  virtual UnitResult is_unit(const Element& a) const = 0;

  /// Installed per instance: a constructive witness or an executed
  /// impossibility check. Present results always verify through eq.
  virtual OnePartner one_partner() const = 0;

  /// Pseudo-random element; zero shows up with positive probability.
  virtual Element sample(Rng& rng) const = 0;

  virtual std::optional<Element> parse_literal(std::string_view text) const = 0;
  virtual std::string render_literal(const Element& a) const = 0;

  /// A unit u with u * b = a, if one can be found.
  virtual std::optional<Element> unit_quotient(const Element& a, const Element& b) const;

  bool is_zero(const Element& a) const;
  bool is_one(const Element& a) const;
  bool owns(const Element& a) const noexcept { return a.semiring_id() == id(); }

  /// Throws UsageError unless `a` belongs to this semiring.
  void require_own(const Element& a) const;

 private:
  Element zero_;
  Element one_;
};

using SemiringRef = std::shared_ptr<const Semiring>;

/// Re-checks a partner against both defining equations; a Present partner
/// that fails is downgraded to Unknown (Distinct results throw: that is a bug).
OnePartner verified_partner(const Semiring& r, OnePartner partner);

}  // namespace nonufd
