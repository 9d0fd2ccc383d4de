#pragma once
// Shared fixtures for the test binaries.

#include <string>
#include <string_view>
#include <vector>

#include <nonufd/nonufd.hpp>

namespace testsupport {

using namespace nonufd;

inline SemiringRef R(std::string_view id) { return default_registry().get(id); }

inline const std::vector<std::string>& all_ids() {
  static const std::vector<std::string> ids = {"nat", "nonneg-rational", "boolean",
                                               "tropical-min-plus", "monoid-nat", "s0"};
  return ids;
}

/// A literal in the semiring's own syntax; throws when it does not parse.
inline Element lit(const SemiringRef& r, std::string_view text) {
  auto e = r->parse_literal(text);
  if (!e) throw std::runtime_error("bad literal in test: " + std::string(text));
  return *e;
}

inline Polynomial P(const SemiringRef& r, std::string_view src) { return parse(src, r); }

inline Polynomial random_poly(const SemiringRef& r, Rng& rng, std::size_t max_degree = 4) {
  const auto deg = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(max_degree)));
  std::vector<Element> cs;
  for (std::size_t i = 0; i <= deg; ++i) cs.push_back(r->sample(rng));
  return Polynomial(r, std::move(cs));
}

inline Element s0_terms(std::initializer_list<std::pair<const std::int64_t, mpz_class>> terms) {
  return S0Value{S0Terms(terms)};
}

}  // namespace testsupport
