#include "nonufd/factor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "nonufd/errors.hpp"

namespace nonufd {

std::string_view to_string(CertVerdict v) {
  switch (v) {
    case CertVerdict::Irreducible: return "Irreducible";
    case CertVerdict::Reducible: return "Reducible";
    case CertVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(CertReason r) {
  switch (r) {
    case CertReason::Lemma1: return "lemma1";
    case CertReason::Lemma2: return "lemma2";
    case CertReason::Lemma3: return "lemma3";
    case CertReason::ExhaustiveSearch: return "exhaustive-search";
    case CertReason::Budget: return "budget";
  }
  return "budget";
}

namespace {

void require_strict_domain(const Semiring& r, std::string_view what) {
  const StructureClaims c = r.claims();
  if (!c.strict || !c.zero_divisor_free) {
    throw PreconditionError(std::string(what) + " needs a strict semiring without zero divisors; '" +
                            std::string(r.id()) + "' does not claim both");
  }
}

Polynomial indeterminate_power_plus(const SemiringRef& r, std::size_t n, const Element& c) {
  std::vector<Element> coeffs(n + 1, r->zero());
  coeffs[0] = c;
  coeffs[n] = r->one();
  return Polynomial(r, std::move(coeffs));
}

// Common body of the two lemmas whose reducibility is decided by a one-partner.
IrreducibilityCertificate partner_certificate(const SemiringRef& r, std::size_t half_degree,
                                              CertReason reason, std::vector<std::string> argument) {
  const std::size_t n = 2 * half_degree;
  std::vector<unsigned long> naturals(n + 1, 0);
  naturals[0] = naturals[half_degree] = naturals[n] = 1;
  IrreducibilityCertificate cert{Polynomial::from_naturals(r, naturals), CertVerdict::Unknown, reason,
                                 std::nullopt, std::move(argument)};

  const OnePartner partner = r->one_partner();
  switch (partner.status) {
    case PartnerStatus::Present: {
      Polynomial lhs = indeterminate_power_plus(r, half_degree, *partner.a);
      Polynomial rhs = indeterminate_power_plus(r, half_degree, *partner.a_inv);
      const Verdict v = poly_eq(poly_mul(lhs, rhs), cert.target);
      if (v == Verdict::Distinct) throw std::logic_error("one-partner split does not reproduce the target");
      cert.argument.push_back("one-partner a = " + r->render_literal(*partner.a) +
                              ", a^-1 = " + r->render_literal(*partner.a_inv) + ": " + partner.argument);
      if (v == Verdict::Equal) {
        cert.verdict = CertVerdict::Reducible;
        cert.witness = std::make_pair(std::move(lhs), std::move(rhs));
      } else {
        cert.reason = CertReason::Budget;
        cert.argument.push_back("product of the split is unresolved within the rewrite budget");
      }
      break;
    }
    case PartnerStatus::Absent:
      cert.verdict = CertVerdict::Irreducible;
      cert.argument.push_back("no one-partner exists: " + partner.argument);
      break;
    case PartnerStatus::Unknown:
      cert.reason = CertReason::Budget;
      cert.argument.push_back("one-partner search inconclusive: " + partner.argument);
      break;
  }
  return cert;
}

std::optional<unsigned long> natural_value(const Element& e) {
  if (const auto* n = std::get_if<NatValue>(&e.payload())) {
    if (n->value.fits_ulong_p()) return n->value.get_ui();
    return std::nullopt;
  }
  if (const auto* b = std::get_if<BooleanValue>(&e.payload())) return b->bit ? 1UL : 0UL;
  return std::nullopt;
}

// Calls visit(coeffs) for every vector in the product of `choices`.
template <class Visit>
void for_each_choice(const std::vector<std::vector<Element>>& choices, Visit&& visit) {
  if (std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); })) return;
  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<Element> current;
  current.reserve(choices.size());
  for (const auto& c : choices) current.push_back(c[0]);
  for (;;) {
    visit(current);
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < choices[i].size()) {
        current[i] = choices[i][idx[i]];
        break;
      }
      idx[i] = 0;
      current[i] = choices[i][0];
    }
    if (i == idx.size()) return;
  }
}

struct FactorListLess {
  bool operator()(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), PolynomialLess{});
  }
};

using FactorSets = std::set<std::vector<Polynomial>, FactorListLess>;

void require_enumerable(const Polynomial& p) {
  if (!p.semiring().capabilities().coefficients_enumerable_bounded) {
    throw UnsupportedError("exhaustive factorization needs enumerable coefficients; '" +
                           std::string(p.semiring_id()) + "' only supports lemma certificates");
  }
}

const FactorSets& factor_sets(const Polynomial& p, const SplitOptions& opts,
                              std::map<Polynomial, FactorSets, PolynomialLess>& memo) {
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  FactorSets out;
  const auto splits = *p.degree() >= 2 ? brute_force_split(p, opts)
                                       : std::vector<std::pair<Polynomial, Polynomial>>{};
  if (splits.empty()) {
    out.insert({p});
  } else {
    for (const auto& [q, r] : splits) {
      const FactorSets fq = factor_sets(q, opts, memo);
      const FactorSets& fr = factor_sets(r, opts, memo);
      for (const auto& a : fq) {
        for (const auto& b : fr) {
          std::vector<Polynomial> merged = a;
          merged.insert(merged.end(), b.begin(), b.end());
          std::sort(merged.begin(), merged.end(), PolynomialLess{});
          out.insert(std::move(merged));
        }
      }
    }
  }
  return memo.emplace(p, std::move(out)).first->second;
}

// Equal when p = u * q for some unit u of the coefficient semiring.
Verdict associated(const Polynomial& p, const Polynomial& q) {
  if (p.degree() != q.degree()) return Verdict::Distinct;
  const Semiring& r = p.semiring();
  const auto u = r.unit_quotient(p.leading(), q.leading());
  if (!u) return r.capabilities().equality_complete ? Verdict::Distinct : Verdict::Unknown;
  return poly_eq(p, poly_scale(*u, q));
}

Verdict match_from(const std::vector<Polynomial>& f, const std::vector<Polynomial>& g, std::size_t i,
                   std::vector<bool>& used) {
  if (i == f.size()) return Verdict::Equal;
  bool unknown = false;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (used[j]) continue;
    const Verdict v = associated(f[i], g[j]);
    if (v == Verdict::Distinct) continue;
    used[j] = true;
    const Verdict rest = match_from(f, g, i + 1, used);
    used[j] = false;
    const Verdict total = both(v, rest);
    if (total == Verdict::Equal) return Verdict::Equal;
    if (total == Verdict::Unknown) unknown = true;
  }
  return unknown ? Verdict::Unknown : Verdict::Distinct;
}

}  // namespace

IrreducibilityCertificate cert_binomial(const SemiringRef& r, std::size_t n, const Element& a) {
  if (n == 0) throw PreconditionError("T^n + a needs n >= 1");
  r->require_own(a);
  require_strict_domain(*r, "the binomial lemma");
  const UnitResult unit = r->is_unit(a);
  if (unit.status != UnitStatus::Unit) {
    throw PreconditionError("constant term " + r->render_literal(a) + " is not a certified unit");
  }

  IrreducibilityCertificate cert{indeterminate_power_plus(r, n, a), CertVerdict::Irreducible,
                                 CertReason::Lemma1, std::nullopt, {}};
  const std::string a_text = r->render_literal(a);
  if (n == 1) {
    cert.argument.push_back("degree 1: a product of two nonconstant factors has degree >= 2, and a "
                            "constant factor c with c * lead = 1 is a unit");
    return cert;
  }
  const std::string ns = std::to_string(n);
  cert.argument = {
      "leading coefficients multiply to 1, so both factors may be taken monic up to units",
      "suppose T^" + ns + " + " + a_text + " = (T^m + c_{m-1}T^{m-1} + ... + c_0)(T^{" + ns +
          "-m} + ... + d_0) with 1 <= m < " + ns,
      "constant terms: c_0 d_0 = " + a_text + ", a unit, hence d_0 is a unit and nonzero",
      "coefficient of T^m (0 < m < " + ns + "): d_0 + sum_{i=1}^{m-1} c_i d_{m-i} = 0",
      "strictness forces d_0 = 0, contradicting d_0 a unit",
  };
  return cert;
}

IrreducibilityCertificate cert_quadratic(const SemiringRef& r) {
  require_strict_domain(*r, "the quadratic lemma");
  return partner_certificate(r, 1, CertReason::Lemma2,
                             {"a split of T^2 + T + 1 is (T + c)(T + d) up to units",
                              "comparing coefficients: c d = 1 and c + d = 1, so c is a one-partner"});
}

IrreducibilityCertificate cert_quartic(const SemiringRef& r) {
  require_strict_domain(*r, "the quartic lemma");
  return partner_certificate(
      r, 2, CertReason::Lemma3,
      {"linear x cubic: (T + c_0)(T^3 + d_2 T^2 + d_1 T + d_0) gives c_0 d_0 = 1 and c_0 + d_2 = 0, "
       "impossible since strictness forces c_0 = 0",
       "quadratic x quadratic: (T^2 + c_1 T + c_0)(T^2 + d_1 T + d_0) gives c_0 d_0 = 1, "
       "c_0 d_1 + c_1 d_0 = 0, c_1 d_1 + c_0 + d_0 = 1, c_1 + d_1 = 0",
       "strictness forces c_1 = d_1 = 0, leaving c_0 d_0 = 1 and c_0 + d_0 = 1: a one-partner"});
}

std::optional<IrreducibilityCertificate> certify_by_shape(const Polynomial& p) {
  const auto deg = p.degree();
  if (!deg || *deg == 0) return std::nullopt;
  const Semiring& r = p.semiring();
  const SemiringRef& ref = p.semiring_ref();
  if (*deg == 2 && poly_eq(p, Polynomial::from_naturals(ref, {1, 1, 1})) == Verdict::Equal) {
    return cert_quadratic(ref);
  }
  if (*deg == 4 && poly_eq(p, Polynomial::from_naturals(ref, {1, 0, 1, 0, 1})) == Verdict::Equal) {
    return cert_quartic(ref);
  }
  if (!p.is_monic()) return std::nullopt;
  for (std::size_t i = 1; i < *deg; ++i) {
    if (!r.is_zero(p.coefficient(i))) return std::nullopt;
  }
  if (r.is_unit(p.coefficient(0)).status != UnitStatus::Unit) return std::nullopt;
  return cert_binomial(ref, *deg, p.coefficient(0));
}

std::vector<std::pair<Polynomial, Polynomial>> brute_force_split(const Polynomial& p,
                                                                 const SplitOptions& opts) {
  require_enumerable(p);
  const auto deg = p.degree();
  if (!deg || *deg < 2) throw PreconditionError("brute_force_split needs degree >= 2");
  const Semiring& r = p.semiring();
  const SemiringRef& ref = p.semiring_ref();
  const bool monic = opts.monic_only;
  if (monic && !p.is_monic()) {
    throw PreconditionError("target is not monic; enable non-monic enumeration");
  }

  // The enumerable set: images of 0..bound, deduplicated (Boolean has two).
  std::vector<Element> values;
  for (unsigned long k = 0; k <= opts.bound; ++k) {
    Element e = r.from_natural(k);
    if (std::find(values.begin(), values.end(), e) == values.end()) values.push_back(std::move(e));
  }
  auto nat_of = [](const Element& e) { return natural_value(e).value_or(~0UL); };

  const std::size_t n = *deg;
  std::vector<std::pair<Polynomial, Polynomial>> out;
  for (std::size_t m = 1; m < n; ++m) {
    // With no cancellation, coeff_i(q) * lead(r) is a summand of coeff_{i+n-m}(p),
    // so coeff_i(q) never exceeds it (likewise for r).
    auto choices_for = [&](std::size_t own_deg, std::size_t other_deg) {
      std::vector<std::vector<Element>> choices(own_deg + 1);
      for (std::size_t i = 0; i <= own_deg; ++i) {
        const unsigned long cap = nat_of(p.coefficient(i + other_deg));
        for (const Element& v : values) {
          if (nat_of(v) > cap) continue;
          if (i == own_deg && (monic ? !r.is_one(v) : r.is_zero(v))) continue;
          choices[i].push_back(v);
        }
      }
      return choices;
    };
    const auto q_choices = choices_for(m, n - m);
    const auto r_choices = choices_for(n - m, m);
    for_each_choice(q_choices, [&](const std::vector<Element>& qc) {
      Polynomial q(ref, qc);
      for_each_choice(r_choices, [&](const std::vector<Element>& rc) {
        Polynomial rp(ref, rc);
        if (poly_compare(q, rp) > 0) return;
        if (poly_eq(poly_mul(q, rp), p) == Verdict::Equal) out.emplace_back(q, std::move(rp));
      });
    });
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (int c = poly_compare(a.first, b.first); c != 0) return c < 0;
    return poly_compare(a.second, b.second) < 0;
  });
  return out;
}

IrreducibilityCertificate cert_exhaustive(const Polynomial& p, const SplitOptions& opts) {
  require_enumerable(p);
  const auto deg = p.degree();
  if (!deg || *deg == 0) throw PreconditionError("constant polynomials have no irreducibility certificate");
  IrreducibilityCertificate cert{p, CertVerdict::Irreducible, CertReason::ExhaustiveSearch, std::nullopt, {}};
  if (*deg == 1) {
    cert.argument.push_back("degree 1: no product of two nonconstant factors has degree 1");
    return cert;
  }
  auto splits = brute_force_split(p, opts);
  const std::string bound = std::to_string(opts.bound);
  if (splits.empty()) {
    cert.argument.push_back("no split with factor coefficients in [0, " + bound + "]");
    unsigned long largest = 0;
    for (const Element& c : p.coefficients()) largest = std::max(largest, natural_value(c).value_or(~0UL));
    if (opts.monic_only && largest <= opts.bound) {
      cert.argument.push_back("complete: factor coefficients never exceed those of the target");
    }
    return cert;
  }
  cert.verdict = CertVerdict::Reducible;
  cert.witness = std::move(splits.front());
  cert.argument.push_back("split found with factor coefficients in [0, " + bound + "]");
  return cert;
}

Factorization Factorization::make(const SemiringRef& r, Element unit, std::vector<Polynomial> factors) {
  r->require_own(unit);
  if (r->is_unit(unit).status != UnitStatus::Unit) {
    throw PreconditionError("factorization scalar " + r->render_literal(unit) + " is not a unit");
  }
  Polynomial product = Polynomial::constant(r, unit);
  for (const Polynomial& f : factors) {
    if (f.semiring_id() != r->id()) throw UsageError("factor over a different semiring");
    if (f.is_constant()) throw PreconditionError("factors must be nonconstant");
    product = poly_mul(product, f);
  }
  return Factorization{std::move(unit), std::move(factors), std::move(product)};
}

Factorization Factorization::make(std::vector<Polynomial> factors) {
  if (factors.empty()) throw PreconditionError("empty factor list needs an explicit semiring");
  SemiringRef r = factors.front().semiring_ref();
  Element one = r->one();
  return make(r, std::move(one), std::move(factors));
}

std::vector<std::size_t> Factorization::degree_multiset() const {
  std::vector<std::size_t> d;
  for (const auto& f : factors) d.push_back(*f.degree());
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<Factorization> all_factorizations(const Polynomial& p, const SplitOptions& opts) {
  require_enumerable(p);
  const auto deg = p.degree();
  if (!deg || *deg == 0) throw PreconditionError("constant polynomials have no factorization into nonconstant factors");
  if (!p.is_monic()) throw UnsupportedError("factorization of non-monic polynomials is not supported");
  SplitOptions monic_opts = opts;
  monic_opts.monic_only = true;
  std::map<Polynomial, FactorSets, PolynomialLess> memo;
  const FactorSets& sets = factor_sets(p, monic_opts, memo);
  std::vector<Factorization> out;
  for (const auto& factors : sets) out.push_back(Factorization::make(factors));
  return out;
}

Verdict factorization_equiv(const Factorization& f, const Factorization& g) {
  require_same_semiring(f.product, g.product);
  if (f.degree_multiset() != g.degree_multiset()) return Verdict::Distinct;
  std::vector<bool> used(g.factors.size(), false);
  return match_from(f.factors, g.factors, 0, used);
}

}  // namespace nonufd
