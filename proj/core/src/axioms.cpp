#include "nonufd/axioms.hpp"

#include <functional>
#include <sstream>

#include "nonufd/errors.hpp"

namespace nonufd {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  // Records one law instance whose truth is the verdict `v` (Equal = holds).
  void law(Verdict v, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (v == Verdict::Unknown) {
      ++result_.unknown;
    } else if (v == Verdict::Distinct) {
      ++result_.failed;
      if (!result_.counterexample) result_.counterexample = describe();
    }
  }

  AxiomResult take() { return std::move(result_); }

 private:
  AxiomResult result_;
};

}  // namespace

bool AxiomReport::passed() const noexcept {
  for (const auto& r : results) {
    if (!r.passed()) return false;
  }
  return true;
}

std::size_t AxiomReport::unknown_total() const noexcept {
  std::size_t n = 0;
  for (const auto& r : results) n += r.unknown;
  return n;
}

const AxiomResult* AxiomReport::find(std::string_view name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::string AxiomReport::render_text() const {
  std::ostringstream out;
  out << "semiring " << semiring_id << " seed " << seed << " samples " << samples << '\n';
  for (const auto& r : results) {
    out << "  " << (r.passed() ? "pass" : "FAIL") << ' ' << r.name << " checked=" << r.checked
        << " failed=" << r.failed << " unknown=" << r.unknown;
    if (r.counterexample) out << " counterexample: " << *r.counterexample;
    out << '\n';
  }
  out << "result " << (passed() ? "pass" : "FAIL") << " unknown_total=" << unknown_total() << '\n';
  return out.str();
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t AxiomReport::digest() const { return fnv1a64(render_text()); }

AxiomReport check_axioms(const Semiring& r, std::uint64_t seed, std::size_t samples) {
  if (samples == 0) throw PreconditionError("check_axioms needs at least one sample");

  Tally add_assoc("add-associativity"), add_comm("add-commutativity");
  Tally mul_assoc("mul-associativity"), mul_comm("mul-commutativity");
  Tally add_id("add-identity"), mul_id("mul-identity"), absorb("zero-absorption");
  Tally distrib("distributivity"), strict("strictness"), no_zd("zero-divisor-freeness");

  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Element a = r.sample(rng);
    const Element b = r.sample(rng);
    const Element c = r.sample(rng);
    auto show = [&](std::initializer_list<const Element*> xs) {
      return [&r, xs = std::vector<const Element*>(xs)] {
        std::string s;
        for (const Element* x : xs) s += (s.empty() ? "" : ", ") + r.render_literal(*x);
        return "(" + s + ")";
      };
    };

    add_assoc.law(r.eq(r.add(r.add(a, b), c), r.add(a, r.add(b, c))), show({&a, &b, &c}));
    add_comm.law(r.eq(r.add(a, b), r.add(b, a)), show({&a, &b}));
    mul_assoc.law(r.eq(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c))), show({&a, &b, &c}));
    mul_comm.law(r.eq(r.mul(a, b), r.mul(b, a)), show({&a, &b}));
    add_id.law(r.eq(r.add(r.zero(), a), a), show({&a}));
    mul_id.law(r.eq(r.mul(r.one(), a), a), show({&a}));
    absorb.law(r.eq(r.mul(r.zero(), a), r.zero()), show({&a}));
    distrib.law(r.eq(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c))), show({&a, &b, &c}));

    // a + b = 0 implies a = b = 0.
    const Verdict sum_zero = r.eq(r.add(a, b), r.zero());
    if (sum_zero == Verdict::Equal) {
      strict.law(both(r.eq(a, r.zero()), r.eq(b, r.zero())), show({&a, &b}));
    } else {
      strict.law(sum_zero == Verdict::Distinct ? Verdict::Equal : Verdict::Unknown, show({&a, &b}));
    }

    // ab = 0 implies a = 0 or b = 0.
    const Verdict prod_zero = r.eq(r.mul(a, b), r.zero());
    if (prod_zero == Verdict::Equal) {
      const Verdict az = r.eq(a, r.zero());
      const Verdict bz = r.eq(b, r.zero());
      Verdict either = Verdict::Distinct;
      if (az == Verdict::Equal || bz == Verdict::Equal) {
        either = Verdict::Equal;
      } else if (az == Verdict::Unknown || bz == Verdict::Unknown) {
        either = Verdict::Unknown;
      }
      no_zd.law(either, show({&a, &b}));
    } else {
      no_zd.law(prod_zero == Verdict::Distinct ? Verdict::Equal : Verdict::Unknown, show({&a, &b}));
    }
  }

  AxiomReport report;
  report.semiring_id = std::string(r.id());
  report.seed = seed;
  report.samples = samples;
  for (Tally* t : {&add_assoc, &add_comm, &mul_assoc, &mul_comm, &add_id, &mul_id, &absorb,
                   &distrib, &strict, &no_zd}) {
    report.results.push_back(t->take());
  }
  return report;
}

}  // namespace nonufd
