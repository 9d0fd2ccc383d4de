#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nonufd/semiring.hpp"

namespace nonufd {

struct AxiomResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t unknown = 0;  // equality verdicts the semiring could not resolve
  std::optional<std::string> counterexample;

  bool passed() const noexcept { return failed == 0; }
};

/// Sampled law checks. Sampling is evidence, not proof: carriers are infinite.
struct AxiomReport {
  std::string semiring_id;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<AxiomResult> results;

  bool passed() const noexcept;
  std::size_t unknown_total() const noexcept;
  const AxiomResult* find(std::string_view name) const;

  std::string render_text() const;
  /// FNV-1a over render_text(); lets theorem reports cite the exact run.
  std::uint64_t digest() const;
};

/// Checks associativity and commutativity of both operations, both
/// identities, zero absorption, distributivity, strictness and absence of
/// zero divisors on `samples` random triples. Deterministic in `seed`.
/// Throws PreconditionError when samples == 0.
AxiomReport check_axioms(const Semiring& r, std::uint64_t seed, std::size_t samples);

std::uint64_t fnv1a64(std::string_view text);

}  // namespace nonufd
