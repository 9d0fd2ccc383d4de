#include "nonufd/registry.hpp"

#include <string>

#include "nonufd/errors.hpp"
#include "nonufd/semirings.hpp"

namespace nonufd {

namespace {

std::string_view resolve_alias(std::string_view name) {
  if (name == "tropical") return ids::kTropical;
  return name;
}

}  // namespace

void Registry::add(SemiringRef semiring) {
  if (!semiring) throw UsageError("cannot register a null semiring");
  if (find(semiring->id())) {
    throw UsageError("semiring id '" + std::string(semiring->id()) + "' is already registered");
  }
  if (semiring->zero() == semiring->one()) {
    throw UsageError("semiring '" + std::string(semiring->id()) + "' is trivial (0 = 1)");
  }
  entries_.push_back(std::move(semiring));
}

SemiringRef Registry::find(std::string_view name) const {
  const std::string_view id = resolve_alias(name);
  for (const auto& s : entries_) {
    if (s->id() == id) return s;
  }
  return nullptr;
}

SemiringRef Registry::get(std::string_view name) const {
  if (auto s = find(name)) return s;
  throw UsageError("unknown semiring '" + std::string(name) + "'");
}

Registry builtin_registry(const RewriteBudget& s0_budget) {
  Registry r;
  r.add(std::make_shared<NatSemiring>());
  r.add(std::make_shared<NonNegRationalSemiring>());
  r.add(std::make_shared<BooleanSemiring>());
  r.add(std::make_shared<TropicalSemiring>());
  r.add(std::make_shared<MonoidNatSemiring>());
  r.add(std::make_shared<S0Semiring>(s0_budget));
  return r;
}

const Registry& default_registry() {
  static const Registry registry = builtin_registry();
  return registry;
}

}  // namespace nonufd
