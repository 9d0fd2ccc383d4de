#include "nonufd/theorem.hpp"

#include <iomanip>
#include <sstream>

#include "nonufd/errors.hpp"
#include "nonufd/expr.hpp"

namespace nonufd {

std::string_view to_string(WitnessCase c) {
  switch (c) {
    case WitnessCase::NoPartner: return "no-partner";
    case WitnessCase::Partner: return "partner";
    case WitnessCase::IdempotentIntro: return "idempotent-intro";
  }
  return "no-partner";
}

std::string_view to_string(UfdVerdict v) {
  return v == UfdVerdict::NotUFD ? "NotUFD" : "Inconclusive";
}

namespace {

Polynomial t_plus(const SemiringRef& r, std::size_t power, const Element& c) {
  std::vector<Element> coeffs(power + 1, r->zero());
  coeffs[0] = c;
  coeffs[power] = r->one();
  return Polynomial(r, std::move(coeffs));
}

void require_claims(const Semiring& r) {
  const StructureClaims c = r.claims();
  if (!c.strict || !c.zero_divisor_free) {
    throw PreconditionError("'" + std::string(r.id()) + "' is not registered as strict without zero divisors");
  }
}

// Fills certificates, degree multisets and the verdict; `first_failure`
// keeps the earliest failed check.
void finish_report(NonUfdReport& report) {
  auto fail = [&report](std::string what) {
    if (report.failed_check.empty()) report.failed_check = std::move(what);
  };

  if (!report.axioms_passed) fail("sampled axiom check failed");
  if (report.axiom_unknown) fail("sampled axiom check left " + std::to_string(report.axiom_unknown) + " equalities unresolved");

  const Verdict v1 = poly_eq(report.first.product, report.product);
  const Verdict v2 = poly_eq(report.second.product, report.product);
  if (v1 != Verdict::Equal) fail("first factorization product is " + std::string(to_string(v1)) + " to the target");
  if (v2 != Verdict::Equal) fail("second factorization product is " + std::string(to_string(v2)) + " to the target");

  for (const Factorization* f : {&report.first, &report.second}) {
    for (const Polynomial& factor : f->factors) {
      auto cert = certify_by_shape(factor);
      if (!cert) {
        fail("no lemma applies to factor " + render(factor));
        continue;
      }
      if (cert->verdict != CertVerdict::Irreducible) {
        fail("factor " + render(factor) + " is " + std::string(to_string(cert->verdict)));
      }
      report.certificates.push_back(std::move(*cert));
    }
  }

  report.first_degrees = report.first.degree_multiset();
  report.second_degrees = report.second.degree_multiset();
  if (report.first_degrees == report.second_degrees) fail("degree multisets coincide");

  const Verdict equiv = factorization_equiv(report.first, report.second);
  if (equiv != Verdict::Distinct) {
    fail("factorizations are " + std::string(equiv == Verdict::Equal ? "associated" : "not separated"));
  }

  report.verdict = report.failed_check.empty() ? UfdVerdict::NotUFD : UfdVerdict::Inconclusive;
}

void attach_axioms(NonUfdReport& report, const Semiring& r, const VerifyOptions& opts) {
  const AxiomReport axioms = check_axioms(r, opts.seed, opts.axiom_samples);
  report.axiom_seed = opts.seed;
  report.axiom_samples = opts.axiom_samples;
  report.axiom_digest = axioms.digest();
  report.axioms_passed = axioms.passed();
  report.axiom_unknown = axioms.unknown_total();
}

}  // namespace

WitnessPair witness_pair(const SemiringRef& r) {
  require_claims(*r);
  const OnePartner partner = r->one_partner();
  const Element& one = r->one();
  const Polynomial t_plus_one = t_plus(r, 1, one);
  const Polynomial t3_plus_one = t_plus(r, 3, one);

  switch (partner.status) {
    case PartnerStatus::Absent:
      return WitnessPair{
          WitnessCase::NoPartner, std::nullopt, std::nullopt,
          Factorization::make({t_plus_one, Polynomial::from_naturals(r, {1, 0, 1, 0, 1})}),
          Factorization::make({t3_plus_one, Polynomial::from_naturals(r, {1, 1, 1})})};
    case PartnerStatus::Present: {
      const Element& a = *partner.a;
      const Element& a_inv = *partner.a_inv;
      return WitnessPair{
          WitnessCase::Partner, a, a_inv,
          Factorization::make({t_plus_one, t_plus(r, 2, a), t_plus(r, 2, a_inv)}),
          Factorization::make({t3_plus_one, t_plus(r, 1, a), t_plus(r, 1, a_inv)})};
    }
    case PartnerStatus::Unknown:
      break;
  }
  throw PreconditionError("one-partner procedure of '" + std::string(r->id()) +
                          "' is inconclusive: " + partner.argument);
}

NonUfdReport verify_non_ufd(const SemiringRef& r, const VerifyOptions& opts) {
  require_claims(*r);
  const Polynomial target = Polynomial::from_naturals(r, {1, 1, 1, 1, 1, 1});
  NonUfdReport report{.semiring_id = std::string(r->id()),
                      .first = Factorization::make({target}),
                      .second = Factorization::make({target}),
                      .product = target};
  attach_axioms(report, *r, opts);

  if (r->one_partner().status == PartnerStatus::Unknown) {
    report.failed_check = "one-partner procedure inconclusive";
    report.verdict = UfdVerdict::Inconclusive;
    return report;
  }
  WitnessPair pair = witness_pair(r);
  report.kind = pair.kind;
  report.partner = pair.a;
  report.partner_inverse = pair.a_inv;
  report.first = std::move(pair.first);
  report.second = std::move(pair.second);
  finish_report(report);
  return report;
}

NonUfdReport idempotent_demo(const SemiringRef& r, const VerifyOptions& opts) {
  require_claims(*r);
  if (r->eq(r->add(r->one(), r->one()), r->one()) != Verdict::Equal) {
    throw PreconditionError("'" + std::string(r->id()) + "' is not idempotent: 1 + 1 != 1");
  }
  Rng rng(opts.seed);
  for (std::size_t i = 0; i < opts.axiom_samples; ++i) {
    const Element a = r->sample(rng);
    if (r->eq(r->add(a, a), a) != Verdict::Equal) {
      throw PreconditionError("'" + std::string(r->id()) + "' is not idempotent at " + r->render_literal(a));
    }
  }

  const Polynomial t_plus_one = t_plus(r, 1, r->one());
  NonUfdReport report{.semiring_id = std::string(r->id()),
                      .kind = WitnessCase::IdempotentIntro,
                      .partner = r->one(),
                      .partner_inverse = r->one(),
                      .first = Factorization::make({t_plus_one, t_plus(r, 2, r->one())}),
                      .second = Factorization::make({t_plus_one, t_plus_one, t_plus_one}),
                      .product = Polynomial::from_naturals(r, {1, 1, 1, 1})};
  attach_axioms(report, *r, opts);
  finish_report(report);
  return report;
}

std::string render_text(const NonUfdReport& report) {
  auto product_form = [](const Factorization& f) {
    std::string s;
    for (const auto& p : f.factors) s += "(" + render(p) + ")";
    return s;
  };
  auto multiset = [](const std::vector<std::size_t>& d) {
    std::string s = "{";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + "}";
  };

  const Semiring& r = report.product.semiring();
  std::ostringstream out;
  out << "semiring: " << report.semiring_id << '\n';
  out << "case: " << to_string(report.kind);
  if (report.partner) {
    out << " (a = " << r.render_literal(*report.partner) << ", a^-1 = "
        << r.render_literal(*report.partner_inverse) << ")";
  }
  out << '\n';
  out << "product: " << render(report.product) << '\n';
  out << "factorization 1: " << product_form(report.first) << '\n';
  out << "factorization 2: " << product_form(report.second) << '\n';
  out << "degrees: " << multiset(report.first_degrees) << " vs " << multiset(report.second_degrees) << '\n';
  for (const auto& c : report.certificates) {
    out << "certificate: " << render(c.target) << " " << to_string(c.verdict) << " (" << to_string(c.reason)
        << ")\n";
  }
  out << "axioms: " << (report.axioms_passed ? "pass" : "FAIL") << " (seed " << report.axiom_seed
      << ", samples " << report.axiom_samples << ", unknown " << report.axiom_unknown << ", digest " << std::hex << std::setw(16) << std::setfill('0') << report.axiom_digest << std::dec
      << ")\n";
  out << "verdict: " << to_string(report.verdict);
  if (!report.failed_check.empty()) out << " (" << report.failed_check << ")";
  out << '\n';
  return out.str();
}

}  // namespace nonufd
