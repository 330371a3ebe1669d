#include <benchmark/benchmark.h>

#include "torusquant/representations.hpp"

namespace {

using namespace tq;

Lagrangian lag(int g, const IntMatrix& rows) { return Lagrangian::from_rows(SymplecticSpace::standard(g), rows); }

HilbertSpace space(const Lagrangian& l, std::int64_t k) { return HilbertSpace::make(Polarization::canonical(l), k); }

void BM_Hnf(benchmark::State& state) {
  const IntMatrix m{{4, 7, 2, 9, 1}, {3, 5, 8, 1, 6}, {2, 9, 4, 7, 3}, {8, 1, 6, 3, 5}};
  for (auto _ : state) benchmark::DoNotOptimize(hnf(m));
}
BENCHMARK(BM_Hnf);

void BM_AdaptedBasis(benchmark::State& state) {
  const Lagrangian l = lag(3, IntMatrix{{1, 0, 0, 2, 1, 0}, {0, 1, 0, 1, 3, 1}, {0, 0, 1, 0, 1, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(adapted_basis(l));
}
BENCHMARK(BM_AdaptedBasis);

void BM_Tau(benchmark::State& state) {
  const Lagrangian a = lag(2, IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}});
  const Lagrangian b = lag(2, IntMatrix{{1, 0, 2, 1}, {0, 1, 1, 3}});
  const Lagrangian c = lag(2, IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(tau(a, b, c));
}
BENCHMARK(BM_Tau);

void BM_BksTransverse(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  const HilbertSpace h1 = space(lag(2, IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}), k);
  const HilbertSpace h2 = space(lag(2, IntMatrix{{1, 0, 2, 1}, {0, 1, 1, 3}}), k);
  for (auto _ : state) benchmark::DoNotOptimize(bks_matrix(h1, h2));
}
BENCHMARK(BM_BksTransverse)->Arg(2)->Arg(4)->Arg(8);

void BM_BksNontransverse(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  const HilbertSpace h1 = space(lag(2, IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}), k);
  const HilbertSpace h2 = space(lag(2, IntMatrix{{1, 0, 0, 0}, {0, 0, 0, 1}}), k);
  for (auto _ : state) benchmark::DoNotOptimize(bks_matrix(h1, h2));
}
BENCHMARK(BM_BksNontransverse)->Arg(2)->Arg(4)->Arg(8);

void BM_UMpGamma(benchmark::State& state) {
  const HilbertSpace h = space(lag(2, IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}), state.range(0));
  const MpElement x = mp_generator(h.frame(), MpKind::Gamma);
  for (auto _ : state) benchmark::DoNotOptimize(u_mp(x, h));
}
BENCHMARK(BM_UMpGamma)->Arg(2)->Arg(4);

void BM_GaussReciprocity(benchmark::State& state) {
  const IntMatrix q{{2, 1}, {1, 3}};
  const RatVector w{Rational(1, 4), Rational(-1, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(gauss_reciprocity_check(q, 4, w));
}
BENCHMARK(BM_GaussReciprocity);

}  // namespace
