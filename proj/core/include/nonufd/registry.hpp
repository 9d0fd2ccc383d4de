#pragma once

#include <string_view>
#include <vector>

#include "nonufd/s0.hpp"
#include "nonufd/semiring.hpp"

namespace nonufd {

/// Registered semirings in registration order; ids are unique.
class Registry {
 public:
  /// Throws UsageError on a duplicate id.
  void add(SemiringRef semiring);

  /// Accepts exact ids and the short alias "tropical".
  SemiringRef find(std::string_view name) const;
  /// As find, but throws UsageError for unknown names.
  SemiringRef get(std::string_view name) const;

  const std::vector<SemiringRef>& all() const noexcept { return entries_; }

 private:
  std::vector<SemiringRef> entries_;
};

/// The six built-in instances, in the fixed order nat, nonneg-rational,
/// boolean, tropical-min-plus, monoid-nat, s0.
Registry builtin_registry(const RewriteBudget& s0_budget = {});

/// Process-wide builtin registry with default budgets.
const Registry& default_registry();

}  // namespace nonufd
