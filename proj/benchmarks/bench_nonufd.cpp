#include <benchmark/benchmark.h>

#include <vector>

#include <nonufd/nonufd.hpp>

using namespace nonufd;

namespace {

SemiringRef R(std::string_view id) { return default_registry().get(id); }

Polynomial random_poly(const SemiringRef& r, Rng& rng, std::size_t degree) {
  std::vector<Element> cs;
  for (std::size_t k = 0; k < degree; ++k) cs.push_back(r->sample(rng));
  cs.push_back(r->one());
  return Polynomial(r, std::move(cs));
}

// Arg 0: registry index, arg 1: degree of each operand.
void BM_PolyMul(benchmark::State& state) {
  const auto r = default_registry().all().at(static_cast<std::size_t>(state.range(0)));
  Rng rng(7);
  const auto p = random_poly(r, rng, static_cast<std::size_t>(state.range(1)));
  const auto q = random_poly(r, rng, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(poly_mul(p, q));
  state.SetLabel(std::string(r->id()));
}
BENCHMARK(BM_PolyMul)->ArgsProduct({{0, 1, 2, 3, 4, 5}, {4, 16}});

void BM_AllFactorizations(benchmark::State& state) {
  const auto nat = R("nat");
  const auto target = Polynomial::from_naturals(nat, {1, 1, 1, 1, 1, 1});
  const SplitOptions opts{static_cast<unsigned long>(state.range(0)), true};
  for (auto _ : state) benchmark::DoNotOptimize(all_factorizations(target, opts));
}
BENCHMARK(BM_AllFactorizations)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_S0EqGraphSearch(benchmark::State& state) {
  const S0Value a{{{1, 1}, {-2, 1}}};
  const S0Value b{{{2, 1}, {-1, 1}}};
  for (auto _ : state) benchmark::DoNotOptimize(s0_eq(a, b));
}
BENCHMARK(BM_S0EqGraphSearch)->Unit(benchmark::kMicrosecond);

// Equal pairs: a random product against a random rewrite walk of it.
// Arg: walk length.
void BM_S0EqRandomWalk(benchmark::State& state) {
  const auto s0 = R("s0");
  Rng rng(11);
  std::vector<std::pair<S0Value, S0Value>> pairs;
  while (pairs.size() < 64) {
    const auto a = s0_mul(s0->sample(rng).as<S0Value>(), s0->sample(rng).as<S0Value>());
    if (a.terms.empty()) continue;  // zero has no applicable rewrites
    S0Terms t = a.terms;
    for (int s = 0; s < state.range(0); ++s) {
      std::vector<RewriteStep> moves;
      for (const auto& [k, c] : t) {
        moves.push_back({RewriteKind::Expand, k});
        if (t.contains(k + 2)) moves.push_back({RewriteKind::Contract, k + 1});
      }
      t = *s0_apply(t, moves[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(moves.size()) - 1))]);
    }
    pairs.emplace_back(a, S0Value{t});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(s0_eq(a, b));
  }
}
BENCHMARK(BM_S0EqRandomWalk)->Arg(4)->Arg(12)->Arg(25)->Unit(benchmark::kMicrosecond);

void BM_VerifyNonUfd(benchmark::State& state) {
  const auto r = default_registry().all().at(static_cast<std::size_t>(state.range(0)));
  const VerifyOptions opts{0, 200};
  for (auto _ : state) benchmark::DoNotOptimize(verify_non_ufd(r, opts));
  state.SetLabel(std::string(r->id()));
}
BENCHMARK(BM_VerifyNonUfd)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
