#pragma once

#include <string_view>

namespace nonufd {

/// Outcome of an equality test. Only budgeted procedures produce Unknown.
enum class Verdict { Equal, Distinct, Unknown };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::Distinct: return "Distinct";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

/// Conjunction over component verdicts: any Distinct wins, then Unknown.
constexpr Verdict both(Verdict a, Verdict b) {
  if (a == Verdict::Distinct || b == Verdict::Distinct) return Verdict::Distinct;
  if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::Equal;
}

}  // namespace nonufd
