#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>

namespace nonufd {

namespace ids {
inline constexpr std::string_view kNat = "nat";
inline constexpr std::string_view kNonNegRational = "nonneg-rational";
inline constexpr std::string_view kBoolean = "boolean";
inline constexpr std::string_view kTropical = "tropical-min-plus";
inline constexpr std::string_view kMonoidNat = "monoid-nat";
inline constexpr std::string_view kS0 = "s0";
}  // namespace ids

struct NatValue {
  mpz_class value;
  bool operator==(const NatValue&) const = default;
};

/// Always in lowest terms with positive denominator.
struct NonNegRationalValue {
  mpq_class value;
  bool operator==(const NonNegRationalValue&) const = default;
};

struct BooleanValue {
  bool bit = false;
  bool operator==(const BooleanValue&) const = default;
};

/// Min-plus value; an empty optional is +infinity, the additive zero.
struct TropicalValue {
  std::optional<mpq_class> value;
  bool operator==(const TropicalValue&) const = default;
};

/// Element of N[Q>0]: exponent (a positive rational) to positive coefficient.
/// The empty map is zero and {1 -> 1} is one.
struct MonoidNatValue {
  std::map<mpq_class, mpz_class> terms;
  bool operator==(const MonoidNatValue&) const = default;
};

/// Element of S0 as a formal sum of powers x^k, k in Z, with y stored as x^-1.
/// Kept contraction-normal: never both k+1 and k-1 present.
struct S0Value {
  std::map<std::int64_t, mpz_class> terms;
  bool operator==(const S0Value&) const = default;
};

/// A tagged exact value. The payload alternative determines the semiring id,
/// so an Element can never silently belong to two semirings.
class Element {
 public:
  using Payload = std::variant<NatValue, NonNegRationalValue, BooleanValue,
                               TropicalValue, MonoidNatValue, S0Value>;

  Element(Payload payload) : payload_(std::move(payload)) {}  // NOLINT(google-explicit-constructor)

  template <class T>
    requires(!std::is_same_v<std::decay_t<T>, Element> && !std::is_same_v<std::decay_t<T>, Payload> &&
             std::is_constructible_v<Payload, T &&>)
  Element(T&& value) : payload_(std::forward<T>(value)) {}  // NOLINT(google-explicit-constructor)

  std::string_view semiring_id() const;
  const Payload& payload() const noexcept { return payload_; }

  /// Throws UsageError when the payload is of another semiring.
  template <class T>
  const T& as() const;

  /// Structural identity of payloads. Semantic equality is Semiring::eq.
  bool operator==(const Element&) const = default;

 private:
  Payload payload_;
};

/// Total structural order, used for canonical ordering of factors and sets.
int structural_compare(const Element& a, const Element& b);

struct StructuralLess {
  bool operator()(const Element& a, const Element& b) const {
    return structural_compare(a, b) < 0;
  }
};

[[noreturn]] void throw_payload_mismatch(std::string_view expected, std::string_view got);

template <class T>
const T& Element::as() const {
  if (const T* p = std::get_if<T>(&payload_)) return *p;
  throw_payload_mismatch(Element(T{}).semiring_id(), semiring_id());
}

}  // namespace nonufd
