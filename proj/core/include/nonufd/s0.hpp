#pragma once

// The finitely presented semiring S0 = N[x, y] / (xy ~ 1, x + y ~ 1).
//
// y is stored as x^-1, which discharges xy ~ 1 structurally. The remaining
// relation, multiplied through by x^k, gives the rewrite family
//
//   contract(k):  x^(k+1) + x^(k-1)  ->  x^k
//   expand(k):    x^k                ->  x^(k+1) + x^(k-1)
//
// Contraction alone is not confluent, so equality combines a bounded
// bidirectional search over both directions with a separating homomorphism
// into Z[zeta], zeta^2 = zeta - 1, that certifies distinctness.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "nonufd/semiring.hpp"

namespace nonufd {

using S0Terms = std::map<std::int64_t, mpz_class>;

struct RewriteBudget {
  std::size_t max_nodes = 100000;
  std::size_t max_depth = 20;
};

/// a + b*zeta in the Eisenstein integers, zeta a primitive sixth root of unity.
struct EisensteinImage {
  mpz_class a;
  mpz_class b;

  bool operator==(const EisensteinImage&) const = default;
  EisensteinImage operator+(const EisensteinImage& o) const { return {a + o.a, b + o.b}; }
  EisensteinImage operator*(const EisensteinImage& o) const;

  /// a^2 + ab + b^2; the units are exactly the norm-one elements.
  mpz_class norm() const { return a * a + a * b + b * b; }
  /// j in [0, 6) with this == zeta^j, when this is a unit.
  std::optional<int> unit_power() const;

  static EisensteinImage zeta_power(std::int64_t k);
};

enum class RewriteKind { Contract, Expand };

struct RewriteStep {
  RewriteKind kind;
  std::int64_t k;
  bool operator==(const RewriteStep&) const = default;
};

/// How s0_eq reached its verdict.
enum class S0EqMethod { None, Identical, Separation, GraphSearch, DivisionPlan };

std::string_view to_string(S0EqMethod m) noexcept;

struct S0EqResult {
  Verdict verdict = Verdict::Unknown;
  S0EqMethod method = S0EqMethod::None;
  std::vector<RewriteStep> trace;  // from lhs to rhs when verdict == Equal
  std::size_t nodes_explored = 0;
};

/// Exhaustively contracts, smallest eligible k first. Performs at most
/// (total multiplicity - 1) rule applications.
S0Value s0_contract(S0Terms raw);

/// Applies one step; nullopt when it is not applicable to `terms`.
std::optional<S0Terms> s0_apply(const S0Terms& terms, const RewriteStep& step);
/// Replays a trace; true iff every step applies and the result is `to`.
bool s0_replay(const S0Terms& from, const std::vector<RewriteStep>& trace, const S0Terms& to);

EisensteinImage s0_separate(const S0Value& a);

S0EqResult s0_eq(const S0Value& a, const S0Value& b, const RewriteBudget& budget = {});

/// Raw sum / convolution product followed by contraction.
S0Value s0_add(const S0Value& a, const S0Value& b);
S0Value s0_mul(const S0Value& a, const S0Value& b);

class S0Semiring final : public Semiring {
 public:
  explicit S0Semiring(RewriteBudget budget = {});
  std::string_view id() const override { return ids::kS0; }
  Capabilities capabilities() const override { return {false, false, false}; }
  Element add(const Element& a, const Element& b) const override;
  Element mul(const Element& a, const Element& b) const override;
  Verdict eq(const Element& a, const Element& b) const override;
  using Semiring::from_natural;
  Element from_natural(const mpz_class& n) const override;
  /// Units map to sixth roots of unity under s0_separate; otherwise NonUnit.
  /// Candidates x^-k are then tried by budgeted equality, else Unknown.
  UnitResult is_unit(const Element& a) const override;
  OnePartner one_partner() const override;
  Element sample(Rng& rng) const override;
  std::optional<Element> parse_literal(std::string_view text) const override;
  std::string render_literal(const Element& a) const override;

  const RewriteBudget& budget() const noexcept { return budget_; }

  /// c * x^k, contracted.
  static Element monomial(std::int64_t k, const mpz_class& c = 1);
  static Element from_terms(S0Terms raw);

 private:
  RewriteBudget budget_;
};

}  // namespace nonufd
