#include "nonufd/semiring.hpp"

#include <string>

#include "nonufd/errors.hpp"

namespace nonufd {

std::optional<Element> Semiring::unit_quotient(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  UnitResult binv = is_unit(b);
  if (binv.status == UnitStatus::Unit) {
    Element u = mul(a, *binv.inverse);
    if (is_unit(u).status == UnitStatus::Unit && eq(mul(u, b), a) == Verdict::Equal) return u;
    return std::nullopt;
  }
  if (eq(a, b) == Verdict::Equal) return one();
  return std::nullopt;
}

bool Semiring::is_zero(const Element& a) const {
  require_own(a);
  return a == zero_;
}

bool Semiring::is_one(const Element& a) const {
  require_own(a);
  return a == one_;
}

void Semiring::require_own(const Element& a) const {
  if (!owns(a)) {
    throw UsageError("element of semiring '" + std::string(a.semiring_id()) +
                     "' passed to semiring '" + std::string(id()) + "'");
  }
}

OnePartner verified_partner(const Semiring& r, OnePartner partner) {
  if (!partner.present()) return partner;
  if (!partner.a || !partner.a_inv) {
    throw std::logic_error("one-partner marked present without a witness");
  }
  const Verdict product = r.eq(r.mul(*partner.a, *partner.a_inv), r.one());
  const Verdict sum = r.eq(r.add(*partner.a, *partner.a_inv), r.one());
  const Verdict v = both(product, sum);
  if (v == Verdict::Distinct) {
    throw std::logic_error("one-partner witness of '" + std::string(r.id()) + "' does not verify");
  }
  if (v == Verdict::Unknown) {
    partner.status = PartnerStatus::Unknown;
    partner.argument += " (witness equations unresolved within budget)";
  }
  return partner;
}

}  // namespace nonufd
