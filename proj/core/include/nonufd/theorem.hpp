#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nonufd/axioms.hpp"
#include "nonufd/factor.hpp"

namespace nonufd {

enum class WitnessCase { NoPartner, Partner, IdempotentIntro };
enum class UfdVerdict { NotUFD, Inconclusive };

std::string_view to_string(WitnessCase c);
std::string_view to_string(UfdVerdict v);

/// Two factorizations of T^5+T^4+T^3+T^2+T+1 into factors of differing
/// degrees. Without a one-partner: (T+1)(T^4+T^2+1) and (T^3+1)(T^2+T+1).
/// With partner a: (T+1)(T^2+a)(T^2+a^-1) and (T^3+1)(T+a)(T+a^-1).
struct WitnessPair {
  WitnessCase kind = WitnessCase::NoPartner;
  std::optional<Element> a;
  std::optional<Element> a_inv;
  Factorization first;
  Factorization second;
};

/// Throws PreconditionError if the semiring does not claim strictness and
/// absence of zero divisors, or if its one-partner procedure is inconclusive.
WitnessPair witness_pair(const SemiringRef& r);

struct NonUfdReport {
  std::string semiring_id;
  WitnessCase kind = WitnessCase::NoPartner;
  std::optional<Element> partner{};
  std::optional<Element> partner_inverse{};
  Factorization first;
  Factorization second;
  Polynomial product;
  std::vector<IrreducibilityCertificate> certificates{};  // first's factors, then second's
  std::vector<std::size_t> first_degrees{};
  std::vector<std::size_t> second_degrees{};
  UfdVerdict verdict = UfdVerdict::Inconclusive;
  std::string failed_check{};  // empty when NotUFD
  std::uint64_t axiom_seed = 0;
  std::size_t axiom_samples = 0;
  std::uint64_t axiom_digest = 0;
  bool axioms_passed = false;
  std::size_t axiom_unknown = 0;  // sampled equalities left unresolved
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t axiom_samples = 200;
};

/// Builds the case-appropriate witness pair, checks both products against
/// the target, certifies every factor by the matching lemma, and compares
/// degree multisets. Any unresolved check yields Inconclusive, never NotUFD.
NonUfdReport verify_non_ufd(const SemiringRef& r, const VerifyOptions& opts = {});

/// (T+1)(T^2+1) = T^3+T^2+T+1 = (T+1)^3 over an idempotent semiring.
/// Throws PreconditionError when 1 + 1 != 1 or sampled a + a != a.
NonUfdReport idempotent_demo(const SemiringRef& r, const VerifyOptions& opts = {});

/// Deterministic multi-line rendering.
std::string render_text(const NonUfdReport& report);

}  // namespace nonufd
