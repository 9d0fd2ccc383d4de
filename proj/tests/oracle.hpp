#pragma once
// Independent factorization oracle over N and the Boolean semiring, on plain
// integer vectors (lowest power first). Deliberately shares no code with the
// library: it enumerates every monic candidate divisor with bounded
// coefficients and multiplies back.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Poly = std::vector<std::int64_t>;
using Factors = std::vector<Poly>;  // sorted

struct Arith {
  bool boolean = false;
  std::int64_t add(std::int64_t a, std::int64_t b) const { return boolean ? (a | b) : a + b; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return boolean ? (a & b) : a * b; }
};

inline Poly multiply(const Arith& ar, const Poly& p, const Poly& q) {
  Poly out(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] = ar.add(out[i + j], ar.mul(p[i], q[j]));
  return out;
}

// Every monic polynomial of the given degree with lower coefficients in [0, bound].
inline void for_each_monic(std::size_t degree, std::int64_t bound, const std::function<void(const Poly&)>& f) {
  Poly p(degree + 1, 0);
  p[degree] = 1;
  for (;;) {
    f(p);
    std::size_t i = 0;
    while (i < degree && p[i] == bound) p[i++] = 0;
    if (i == degree) return;
    ++p[i];
  }
}

/// Ordered pairs (q, r), deg q <= deg r, both nonconstant and monic, q*r == p.
inline std::vector<std::pair<Poly, Poly>> splits(const Arith& ar, const Poly& p, std::int64_t bound) {
  std::vector<std::pair<Poly, Poly>> out;
  const std::size_t n = p.size() - 1;
  if (ar.boolean) bound = std::min<std::int64_t>(bound, 1);  // the carrier is {0, 1}
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    for_each_monic(d, bound, [&](const Poly& q) {
      for_each_monic(n - d, bound, [&](const Poly& r) {
        if (multiply(ar, q, r) != p) return;
        if (d * 2 == n && r < q) return;  // count {q, r} once
        out.emplace_back(q, r);
      });
    });
  }
  return out;
}

/// All factorizations into irreducibles (multisets of monic factors).
inline std::set<Factors> factorizations(const Arith& ar, const Poly& p, std::int64_t bound) {
  std::set<Factors> out;
  const auto sp = splits(ar, p, bound);
  if (sp.empty()) {
    out.insert(Factors{p});
    return out;
  }
  for (const auto& [q, r] : sp) {
    for (const auto& fq : factorizations(ar, q, bound)) {
      for (const auto& fr : factorizations(ar, r, bound)) {
        Factors all = fq;
        all.insert(all.end(), fr.begin(), fr.end());
        std::sort(all.begin(), all.end());
        out.insert(all);
      }
    }
  }
  return out;
}

}  // namespace oracle
