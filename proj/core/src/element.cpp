#include "nonufd/element.hpp"

#include <array>
#include <string>

#include "nonufd/errors.hpp"

namespace nonufd {

namespace {

constexpr std::array<std::string_view, std::variant_size_v<Element::Payload>> kIds = {
    ids::kNat, ids::kNonNegRational, ids::kBoolean, ids::kTropical, ids::kMonoidNat, ids::kS0};

int sign(int c) { return (c > 0) - (c < 0); }

template <class K, class V>
int compare_maps(const std::map<K, V>& a, const std::map<K, V>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (ia->first < ib->first) return -1;
    if (ib->first < ia->first) return 1;
    if (int c = sign(cmp(ia->second, ib->second)); c != 0) return c;
  }
  if (ia == a.end() && ib == b.end()) return 0;
  return ia == a.end() ? -1 : 1;
}

int compare_payload(const NatValue& a, const NatValue& b) { return sign(cmp(a.value, b.value)); }
int compare_payload(const NonNegRationalValue& a, const NonNegRationalValue& b) {
  return sign(cmp(a.value, b.value));
}
int compare_payload(const BooleanValue& a, const BooleanValue& b) {
  return static_cast<int>(a.bit) - static_cast<int>(b.bit);
}
int compare_payload(const TropicalValue& a, const TropicalValue& b) {
  if (!a.value || !b.value) return static_cast<int>(!a.value) - static_cast<int>(!b.value);
  return sign(cmp(*a.value, *b.value));
}
int compare_payload(const MonoidNatValue& a, const MonoidNatValue& b) {
  return compare_maps(a.terms, b.terms);
}
int compare_payload(const S0Value& a, const S0Value& b) { return compare_maps(a.terms, b.terms); }

}  // namespace

std::string_view Element::semiring_id() const { return kIds[payload_.index()]; }

int structural_compare(const Element& a, const Element& b) {
  const auto ia = a.payload().index();
  const auto ib = b.payload().index();
  if (ia != ib) return ia < ib ? -1 : 1;
  return std::visit(
      [&](const auto& pa) {
        using T = std::decay_t<decltype(pa)>;
        return compare_payload(pa, std::get<T>(b.payload()));
      },
      a.payload());
}

void throw_payload_mismatch(std::string_view expected, std::string_view got) {
  throw UsageError("element of semiring '" + std::string(got) + "' used where '" +
                   std::string(expected) + "' was expected");
}

}  // namespace nonufd
