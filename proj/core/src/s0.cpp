#include "nonufd/s0.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>
#include <string>

#include "nonufd/errors.hpp"

namespace nonufd {

namespace {

const std::array<EisensteinImage, 6>& zeta_powers() {
  // zeta^j for j = 0..5 under zeta^2 = zeta - 1.
  static const std::array<EisensteinImage, 6> table = {{
      {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1},
  }};
  return table;
}

void drop_zeros(S0Terms& terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
}

void decrement(S0Terms& terms, std::int64_t k, const mpz_class& by) {
  auto it = terms.find(k);
  it->second -= by;
  if (it->second == 0) terms.erase(it);
}

// Smallest k >= lower with both k-1 and k+1 present.
std::optional<std::int64_t> smallest_contractible(const S0Terms& terms, std::int64_t lower) {
  for (auto it = terms.lower_bound(lower - 1); it != terms.end(); ++it) {
    if (terms.contains(it->first + 2)) return it->first + 1;
  }
  return std::nullopt;
}

RewriteStep inverse(const RewriteStep& s) {
  return {s.kind == RewriteKind::Contract ? RewriteKind::Expand : RewriteKind::Contract, s.k};
}

struct SearchNode {
  const S0Terms* parent = nullptr;
  RewriteStep step{RewriteKind::Contract, 0};
  std::size_t depth = 0;
};

using SearchTree = std::map<S0Terms, SearchNode>;

// Neighbours in fixed order: contractions by ascending k, then expansions.
std::vector<std::pair<RewriteStep, S0Terms>> neighbours(const S0Terms& terms) {
  std::vector<std::pair<RewriteStep, S0Terms>> out;
  for (const auto& [e, c] : terms) {
    if (terms.contains(e + 2)) {
      const RewriteStep step{RewriteKind::Contract, e + 1};
      out.emplace_back(step, *s0_apply(terms, step));
    }
  }
  for (const auto& [e, c] : terms) {
    const RewriteStep step{RewriteKind::Expand, e};
    out.emplace_back(step, *s0_apply(terms, step));
  }
  return out;
}

// Steps that lead from the tree's root to `node`.
std::vector<RewriteStep> path_from_root(const SearchTree& tree, const S0Terms& node) {
  std::vector<RewriteStep> steps;
  const S0Terms* cur = &node;
  for (;;) {
    const SearchNode& info = tree.at(*cur);
    if (info.parent == nullptr) break;
    steps.push_back(info.step);
    cur = info.parent;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

std::vector<RewriteStep> join(const SearchTree& from_lhs, const SearchTree& from_rhs, const S0Terms& meet) {
  std::vector<RewriteStep> trace = path_from_root(from_lhs, meet);
  std::vector<RewriteStep> back = path_from_root(from_rhs, meet);
  for (auto it = back.rbegin(); it != back.rend(); ++it) trace.push_back(inverse(*it));
  return trace;
}

// Builds a trace while enforcing a step limit.
class TraceBuilder {
 public:
  TraceBuilder(S0Terms start, std::size_t max_steps) : state_(std::move(start)), max_steps_(max_steps) {}

  bool apply(const RewriteStep& step, const mpz_class& copies = 1) {
    if (copies > max_steps_ - trace_.size()) return false;
    const auto n = copies.get_ui();
    const bool enough = step.kind == RewriteKind::Contract
                            ? count(step.k - 1) >= copies && count(step.k + 1) >= copies
                            : count(step.k) >= copies;
    if (!enough) return false;
    if (step.kind == RewriteKind::Contract) {
      decrement(state_, step.k - 1, copies);
      decrement(state_, step.k + 1, copies);
      state_[step.k] += copies;
    } else {
      decrement(state_, step.k, copies);
      state_[step.k - 1] += copies;
      state_[step.k + 1] += copies;
    }
    trace_.insert(trace_.end(), n, step);
    return true;
  }

  mpz_class count(std::int64_t k) const {
    auto it = state_.find(k);
    return it == state_.end() ? mpz_class(0) : it->second;
  }

  const S0Terms& state() const noexcept { return state_; }
  std::vector<RewriteStep> take() { return std::move(trace_); }

 private:
  S0Terms state_;
  std::size_t max_steps_;
  std::vector<RewriteStep> trace_;
};

// n0 = x^p + x^(p+3) maps to 0 in Z[zeta]. Any present term x^k can emit one
// at p = k - 1 and absorb it again, and it can be shifted by one position in
// two steps, so it serves as a catalyst for moves that lack a term.
bool shift_catalyst(TraceBuilder& tb, std::int64_t from, std::int64_t to) {
  for (; from < to; ++from) {
    if (!tb.apply({RewriteKind::Expand, from + 3}) || !tb.apply({RewriteKind::Contract, from + 1})) return false;
  }
  for (; from > to; --from) {
    if (!tb.apply({RewriteKind::Expand, from}) || !tb.apply({RewriteKind::Contract, from + 2})) return false;
  }
  return true;
}

std::int64_t nearest_term(const S0Terms& terms, std::int64_t target) {
  std::int64_t best = terms.begin()->first;
  for (const auto& [k, c] : terms) {
    if (std::llabs(k - target) < std::llabs(best - target)) best = k;
  }
  return best;
}

bool emit_catalyst(TraceBuilder& tb, std::int64_t position) {
  const std::int64_t k = nearest_term(tb.state(), position + 1);
  if (!tb.apply({RewriteKind::Expand, k}) || !tb.apply({RewriteKind::Expand, k + 1})) return false;
  return shift_catalyst(tb, k - 1, position);
}

bool absorb_catalyst(TraceBuilder& tb, std::int64_t position) {
  S0Terms others = tb.state();
  decrement(others, position, 1);
  decrement(others, position + 3, 1);
  if (others.empty()) return false;
  const std::int64_t k = nearest_term(others, position + 1);
  if (!shift_catalyst(tb, position, k - 1)) return false;
  return tb.apply({RewriteKind::Contract, k + 1}) && tb.apply({RewriteKind::Contract, k});
}

// Net rewrite moves from f to g. Over Z[x, 1/x], f - g is a multiple
// h * (x^2 - x + 1) exactly when the images agree, and h is unique: the
// coefficient h_k counts contractions minus expansions centred at k + 1.
// The moves are scheduled greedily, borrowing catalysts when a move lacks
// a term and returning them at the end. nullopt when the step limit is hit.
std::optional<std::vector<RewriteStep>> plan_by_division(const S0Terms& f, const S0Terms& g,
                                                         std::size_t max_steps) {
  if (f.empty() || g.empty()) return std::nullopt;
  std::map<std::int64_t, mpz_class> rest;
  for (const auto& [k, c] : f) rest[k] += c;
  for (const auto& [k, c] : g) rest[k] -= c;
  drop_zeros(rest);
  if (rest.empty()) return std::vector<RewriteStep>{};

  std::map<std::int64_t, mpz_class> pending;  // centre -> signed move count
  mpz_class total = 0;
  const std::int64_t hi = rest.rbegin()->first;
  for (std::int64_t k = rest.begin()->first; k + 2 <= hi; ++k) {
    auto it = rest.find(k);
    if (it == rest.end()) continue;
    const mpz_class c = it->second;
    rest.erase(it);
    rest[k + 1] += c;
    rest[k + 2] -= c;
    pending[k + 1] = c;
    total += abs(c);
  }
  drop_zeros(rest);
  if (!rest.empty() || total > max_steps) return std::nullopt;
  drop_zeros(pending);

  TraceBuilder tb(f, max_steps);
  std::vector<std::int64_t> borrowed;

  auto try_move = [&](bool contraction) -> std::optional<bool> {
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      const std::int64_t centre = it->first;
      const mpz_class want = it->second;
      if ((want > 0) != contraction) continue;
      const mpz_class avail =
          contraction ? std::min(tb.count(centre - 1), tb.count(centre + 1)) : tb.count(centre);
      if (avail == 0) continue;
      const mpz_class n = std::min(avail, mpz_class(abs(want)));
      if (!tb.apply({contraction ? RewriteKind::Contract : RewriteKind::Expand, centre}, n)) return std::nullopt;
      it->second += contraction ? mpz_class(-n) : n;
      if (it->second == 0) pending.erase(it);
      return true;
    }
    return false;
  };

  while (!pending.empty()) {
    auto moved = try_move(true);
    if (moved && !*moved) moved = try_move(false);
    if (!moved) return std::nullopt;
    if (*moved) continue;
    // Stuck: supply the missing terms of the first pending move.
    const auto [centre, want] = *pending.begin();
    std::vector<std::int64_t> needed = want > 0 ? std::vector<std::int64_t>{centre - 1, centre + 1}
                                                : std::vector<std::int64_t>{centre};
    for (std::int64_t e : needed) {
      if (tb.count(e) != 0) continue;
      if (!emit_catalyst(tb, e)) return std::nullopt;
      borrowed.push_back(e);
    }
  }
  for (auto it = borrowed.rbegin(); it != borrowed.rend(); ++it) {
    if (!absorb_catalyst(tb, *it)) return std::nullopt;
  }
  if (tb.state() != g) return std::nullopt;
  return tb.take();
}

}  // namespace

EisensteinImage EisensteinImage::operator*(const EisensteinImage& o) const {
  return {a * o.a - b * o.b, a * o.b + b * o.a + b * o.b};
}

std::optional<int> EisensteinImage::unit_power() const {
  const auto& table = zeta_powers();
  for (int j = 0; j < 6; ++j) {
    if (table[j] == *this) return j;
  }
  return std::nullopt;
}

EisensteinImage EisensteinImage::zeta_power(std::int64_t k) {
  return zeta_powers()[static_cast<std::size_t>(((k % 6) + 6) % 6)];
}

S0Value s0_contract(S0Terms raw) {
  drop_zeros(raw);
  std::int64_t lower = raw.empty() ? 0 : raw.begin()->first;
  while (auto k = smallest_contractible(raw, lower)) {
    // With nothing at k-2, contracting at k cannot make k-1 eligible, so
    // k stays the smallest eligible pair and the copies can go in one batch.
    mpz_class copies = 1;
    if (!raw.contains(*k - 2)) copies = std::min(raw.at(*k + 1), raw.at(*k - 1));
    decrement(raw, *k + 1, copies);
    decrement(raw, *k - 1, copies);
    raw[*k] += copies;
    lower = *k - 1;
  }
  return S0Value{std::move(raw)};
}

std::optional<S0Terms> s0_apply(const S0Terms& terms, const RewriteStep& step) {
  S0Terms out = terms;
  if (step.kind == RewriteKind::Contract) {
    if (!terms.contains(step.k + 1) || !terms.contains(step.k - 1)) return std::nullopt;
    decrement(out, step.k + 1, 1);
    decrement(out, step.k - 1, 1);
    out[step.k] += 1;
  } else {
    if (!terms.contains(step.k)) return std::nullopt;
    decrement(out, step.k, 1);
    out[step.k + 1] += 1;
    out[step.k - 1] += 1;
  }
  return out;
}

bool s0_replay(const S0Terms& from, const std::vector<RewriteStep>& trace, const S0Terms& to) {
  S0Terms cur = from;
  drop_zeros(cur);
  for (const RewriteStep& step : trace) {
    auto next = s0_apply(cur, step);
    if (!next) return false;
    cur = std::move(*next);
  }
  S0Terms target = to;
  drop_zeros(target);
  return cur == target;
}

EisensteinImage s0_separate(const S0Value& a) {
  EisensteinImage image{0, 0};
  for (const auto& [k, c] : a.terms) {
    const EisensteinImage z = EisensteinImage::zeta_power(k);
    image.a += c * z.a;
    image.b += c * z.b;
  }
  return image;
}

namespace {

// Bidirectional breadth-first search; grows the smaller frontier first.
bool bidirectional_search(const S0Terms& lhs, const S0Terms& rhs, std::size_t max_depth,
                          std::size_t max_nodes, S0EqResult& result) {
  SearchTree trees[2];
  std::vector<const S0Terms*> frontier[2];
  std::size_t depth[2] = {0, 0};
  for (int side = 0; side < 2; ++side) {
    auto [it, inserted] = trees[side].emplace(side == 0 ? lhs : rhs, SearchNode{});
    frontier[side].push_back(&it->first);
  }
  auto explored = [&] { return trees[0].size() + trees[1].size(); };

  while (depth[0] + depth[1] < max_depth) {
    if (frontier[0].empty() && frontier[1].empty()) break;
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (frontier[side].empty()) side = 1 - side;
    const int other = 1 - side;

    std::vector<const S0Terms*> next;
    for (const S0Terms* node : frontier[side]) {
      for (auto& [step, terms] : neighbours(*node)) {
        if (trees[side].contains(terms)) continue;
        auto [it, inserted] = trees[side].emplace(std::move(terms), SearchNode{node, step, depth[side] + 1});
        const S0Terms& key = it->first;
        if (trees[other].contains(key)) {
          result.trace = join(trees[0], trees[1], key);
          result.nodes_explored += explored();
          return true;
        }
        if (explored() > max_nodes) {
          result.nodes_explored += explored();
          return false;
        }
        next.push_back(&key);
      }
    }
    frontier[side] = std::move(next);
    ++depth[side];
  }
  result.nodes_explored += explored();
  return false;
}

constexpr std::size_t kShortSearchDepth = 6;
constexpr std::size_t kShortSearchNodes = 4096;

}  // namespace

S0EqResult s0_eq(const S0Value& lhs, const S0Value& rhs, const RewriteBudget& budget) {
  S0EqResult result;
  if (lhs.terms == rhs.terms) {
    result.verdict = Verdict::Equal;
    result.method = S0EqMethod::Identical;
    return result;
  }
  // No rule turns a nonempty sum into the empty one or back.
  if (lhs.terms.empty() != rhs.terms.empty() || s0_separate(lhs) != s0_separate(rhs)) {
    result.verdict = Verdict::Distinct;
    result.method = S0EqMethod::Separation;
    return result;
  }

  auto found = [&](S0EqMethod method) {
    if (!s0_replay(lhs.terms, result.trace, rhs.terms)) throw std::logic_error("s0_eq: trace does not replay");
    result.verdict = Verdict::Equal;
    result.method = method;
    return result;
  };
  // Nearby elements: a short search gives the shortest trace.
  if (bidirectional_search(lhs.terms, rhs.terms, std::min(budget.max_depth, kShortSearchDepth),
                           std::min(budget.max_nodes, kShortSearchNodes), result)) {
    return found(S0EqMethod::GraphSearch);
  }
  if (auto plan = plan_by_division(lhs.terms, rhs.terms, budget.max_nodes)) {
    result.trace = std::move(*plan);
    result.nodes_explored += result.trace.size();
    return found(S0EqMethod::DivisionPlan);
  }
  if (budget.max_depth > kShortSearchDepth || budget.max_nodes > kShortSearchNodes) {
    result.trace.clear();
    if (bidirectional_search(lhs.terms, rhs.terms, budget.max_depth, budget.max_nodes, result)) {
      return found(S0EqMethod::GraphSearch);
    }
  }
  return result;
}

std::string_view to_string(S0EqMethod m) noexcept {
  switch (m) {
    case S0EqMethod::Identical: return "identical";
    case S0EqMethod::Separation: return "separation";
    case S0EqMethod::GraphSearch: return "graph-search";
    case S0EqMethod::DivisionPlan: return "division-plan";
    case S0EqMethod::None: break;
  }
  return "none";
}

S0Value s0_add(const S0Value& a, const S0Value& b) {
  S0Terms raw = a.terms;
  for (const auto& [k, c] : b.terms) raw[k] += c;
  return s0_contract(std::move(raw));
}

S0Value s0_mul(const S0Value& a, const S0Value& b) {
  S0Terms raw;
  for (const auto& [ka, ca] : a.terms) {
    for (const auto& [kb, cb] : b.terms) raw[ka + kb] += ca * cb;
  }
  return s0_contract(std::move(raw));
}

// ---------------------------------------------------------------- semiring

S0Semiring::S0Semiring(RewriteBudget budget)
    : Semiring(S0Value{}, monomial(0)), budget_(budget) {
  if (budget_.max_nodes == 0 || budget_.max_depth == 0) {
    throw UsageError("rewrite budget limits must be positive");
  }
}

Element S0Semiring::monomial(std::int64_t k, const mpz_class& c) {
  S0Terms t;
  t[k] = c;
  return s0_contract(std::move(t));
}

Element S0Semiring::from_terms(S0Terms raw) { return s0_contract(std::move(raw)); }

Element S0Semiring::add(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  return s0_add(a.as<S0Value>(), b.as<S0Value>());
}

Element S0Semiring::mul(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  return s0_mul(a.as<S0Value>(), b.as<S0Value>());
}

Verdict S0Semiring::eq(const Element& a, const Element& b) const {
  require_own(a);
  require_own(b);
  return s0_eq(a.as<S0Value>(), b.as<S0Value>(), budget_).verdict;
}

Element S0Semiring::from_natural(const mpz_class& n) const { return monomial(0, n); }

UnitResult S0Semiring::is_unit(const Element& a) const {
  require_own(a);
  const auto& terms = a.as<S0Value>().terms;
  if (terms.empty()) return UnitResult::non_unit();
  // Ring homomorphisms send units to units; those of Z[zeta] are zeta^j.
  const auto j = s0_separate(a.as<S0Value>()).unit_power();
  if (!j) return UnitResult::non_unit();
  if (terms.size() == 1 && terms.begin()->second == 1) {
    return UnitResult::unit(monomial(-terms.begin()->first));
  }
  // Candidate inverses x^-k with k = j (mod 6) near the support of a.
  const std::int64_t lo = terms.begin()->first - 6;
  const std::int64_t hi = terms.rbegin()->first + 6;
  for (std::int64_t k = lo; k <= hi; ++k) {
    if ((((k - *j) % 6) + 6) % 6 != 0) continue;
    Element candidate = monomial(-k);
    if (eq(mul(a, candidate), one()) == Verdict::Equal) return UnitResult::unit(candidate);
  }
  return UnitResult::unknown();
}

OnePartner S0Semiring::one_partner() const {
  return verified_partner(*this, {PartnerStatus::Present, monomial(1), monomial(-1),
                                  "x * y ~ 1 and x + y ~ 1 are the defining relations"});
}

Element S0Semiring::sample(Rng& rng) const {
  if (uniform_int(rng, 0, 7) == 0) return zero();
  S0Terms raw;
  const auto n = uniform_int(rng, 1, 3);
  for (std::int64_t i = 0; i < n; ++i) {
    raw[uniform_int(rng, -2, 2)] += static_cast<unsigned long>(uniform_int(rng, 1, 2));
  }
  return s0_contract(std::move(raw));
}

std::optional<Element> S0Semiring::parse_literal(std::string_view text) const {
  if (text == "x") return monomial(1);
  if (text == "y") return monomial(-1);
  if (!text.empty() && std::all_of(text.begin(), text.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return from_natural(mpz_class(std::string(text), 10));
  }
  return std::nullopt;
}

std::string S0Semiring::render_literal(const Element& a) const {
  require_own(a);
  const auto& terms = a.as<S0Value>().terms;
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto [k, c] = *it;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str() + "*";
    const char base = k > 0 ? 'x' : 'y';
    const std::int64_t power = k > 0 ? k : -k;
    out += base;
    if (power > 1) out += "^" + std::to_string(power);
  }
  return out;
}

}  // namespace nonufd
