#include "nonufd/poly.hpp"

#include <string>

#include "nonufd/errors.hpp"

namespace nonufd {

Polynomial::Polynomial(SemiringRef r) : semiring_(std::move(r)) {
  if (!semiring_) throw UsageError("polynomial needs a semiring");
}

Polynomial::Polynomial(SemiringRef r, std::vector<Element> coeffs)
    : semiring_(std::move(r)), coeffs_(std::move(coeffs)) {
  if (!semiring_) throw UsageError("polynomial needs a semiring");
  for (const Element& c : coeffs_) semiring_->require_own(c);
  trim();
}

Polynomial Polynomial::constant(SemiringRef r, Element c) {
  return Polynomial(std::move(r), std::vector<Element>{std::move(c)});
}

Polynomial Polynomial::monomial(SemiringRef r, Element c, std::size_t power) {
  std::vector<Element> coeffs(power + 1, r->zero());
  coeffs[power] = std::move(c);
  return Polynomial(std::move(r), std::move(coeffs));
}

Polynomial Polynomial::from_naturals(SemiringRef r, std::initializer_list<unsigned long> coeffs) {
  return from_naturals(std::move(r), std::span<const unsigned long>(coeffs.begin(), coeffs.size()));
}

Polynomial Polynomial::from_naturals(SemiringRef r, std::span<const unsigned long> coeffs) {
  std::vector<Element> out;
  out.reserve(coeffs.size());
  for (unsigned long n : coeffs) out.push_back(r->from_natural(n));
  return Polynomial(std::move(r), std::move(out));
}

const Element& Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : semiring_->zero();
}

const Element& Polynomial::leading() const {
  if (coeffs_.empty()) throw UsageError("the zero polynomial has no leading coefficient");
  return coeffs_.back();
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && semiring_->is_one(coeffs_.back()); }

bool Polynomial::operator==(const Polynomial& o) const {
  return semiring_id() == o.semiring_id() && coeffs_ == o.coeffs_;
}

void Polynomial::trim() {
  // Zero payloads are canonical in every instance, so this is exact.
  while (!coeffs_.empty() && semiring_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

void require_same_semiring(const Polynomial& p, const Polynomial& q) {
  if (p.semiring_id() != q.semiring_id()) {
    throw UsageError("polynomials over '" + std::string(p.semiring_id()) + "' and '" +
                     std::string(q.semiring_id()) + "' cannot be combined");
  }
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
  require_same_semiring(p, q);
  const Semiring& r = p.semiring();
  const std::size_t n = std::max(p.coefficients().size(), q.coefficients().size());
  std::vector<Element> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(r.add(p.coefficient(i), q.coefficient(i)));
  return Polynomial(p.semiring_ref(), std::move(out));
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
  require_same_semiring(p, q);
  if (p.is_zero() || q.is_zero()) return Polynomial(p.semiring_ref());
  const Semiring& r = p.semiring();
  const auto pc = p.coefficients();
  const auto qc = q.coefficients();
  std::vector<Element> out(pc.size() + qc.size() - 1, r.zero());
  for (std::size_t i = 0; i < pc.size(); ++i) {
    if (r.is_zero(pc[i])) continue;
    for (std::size_t j = 0; j < qc.size(); ++j) {
      if (r.is_zero(qc[j])) continue;
      out[i + j] = r.add(out[i + j], r.mul(pc[i], qc[j]));
    }
  }
  return Polynomial(p.semiring_ref(), std::move(out));
}

Polynomial poly_scale(const Element& c, const Polynomial& p) {
  const Semiring& r = p.semiring();
  std::vector<Element> out;
  out.reserve(p.coefficients().size());
  for (const Element& a : p.coefficients()) out.push_back(r.mul(c, a));
  return Polynomial(p.semiring_ref(), std::move(out));
}

Polynomial poly_pow(const Polynomial& p, std::size_t k) {
  Polynomial result = Polynomial::constant(p.semiring_ref(), p.semiring().one());
  Polynomial base = p;
  while (k > 0) {
    if (k & 1U) result = poly_mul(result, base);
    k >>= 1U;
    if (k > 0) base = poly_mul(base, base);
  }
  return result;
}

Verdict poly_eq(const Polynomial& p, const Polynomial& q) {
  require_same_semiring(p, q);
  if (p.degree() != q.degree()) return Verdict::Distinct;
  const Semiring& r = p.semiring();
  Verdict v = Verdict::Equal;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    v = both(v, r.eq(p.coefficient(i), q.coefficient(i)));
    if (v == Verdict::Distinct) return v;
  }
  return v;
}

Element poly_eval(const Polynomial& p, const Element& v) {
  const Semiring& r = p.semiring();
  r.require_own(v);
  Element acc = r.zero();
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = r.add(r.mul(acc, v), *it);
  return acc;
}

bool poly_units_check(const Polynomial& p, const Polynomial& q) {
  require_same_semiring(p, q);
  if (p.is_zero() || q.is_zero()) throw PreconditionError("poly_units_check needs nonzero polynomials");
  const Polynomial one = Polynomial::constant(p.semiring_ref(), p.semiring().one());
  return poly_eq(poly_mul(p, q), one) == Verdict::Equal;
}

int poly_compare(const Polynomial& p, const Polynomial& q) {
  const auto pn = p.coefficients().size();
  const auto qn = q.coefficients().size();
  if (pn != qn) return pn < qn ? -1 : 1;
  for (std::size_t i = 0; i < pn; ++i) {
    if (int c = structural_compare(p.coefficients()[i], q.coefficients()[i]); c != 0) return c;
  }
  return 0;
}

}  // namespace nonufd
