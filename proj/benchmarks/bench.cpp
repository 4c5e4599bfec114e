#include <benchmark/benchmark.h>

#include "eck/chaincx.hpp"
#include "eck/dehntwist.hpp"
#include "eck/euler.hpp"
#include "eck/surgery.hpp"
#include "eck/torusknot.hpp"

namespace {

void BM_PfcComplex(benchmark::State& state) {
  eck::SlopeInterval iv = eck::twist_interval(5);
  for (auto _ : state) {
    auto c = eck::pfc_complex(iv, 2, state.range(0));
    benchmark::DoNotOptimize(c.generators.size());
  }
}
BENCHMARK(BM_PfcComplex)->Arg(9)->Arg(11)->Arg(13);

void BM_PfcHomology(benchmark::State& state) {
  eck::SlopeInterval iv = eck::twist_interval(5);
  auto c = eck::pfc_complex(iv, 2, 13);
  for (auto _ : state) {
    auto h = eck::homology(c);
    benchmark::DoNotOptimize(h.rank);
  }
}
BENCHMARK(BM_PfcHomology);

void BM_SurgeryEckHat(benchmark::State& state) {
  for (auto _ : state) {
    auto res = eck::surgery_eck_hat({7, static_cast<int>(state.range(0))});
    benchmark::DoNotOptimize(res.classes.size());
  }
}
BENCHMARK(BM_SurgeryEckHat)->Arg(8)->Arg(12);

void BM_FoxTorsion(benchmark::State& state) {
  for (auto _ : state) {
    auto s = eck::fox_torsion_torus(2, 9, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(s.coeff.size());
  }
}
BENCHMARK(BM_FoxTorsion)->Arg(64)->Arg(256);

void BM_SpectralSequence(benchmark::State& state) {
  auto c = eck::full_complex(7, 7);
  auto f = eck::filtration_from_grading(
      c, "alexander", eck::FiltrationSpec::Direction::Descending);
  for (auto _ : state) {
    auto pages = eck::spectral_sequence(c, f, 3);
    benchmark::DoNotOptimize(pages.size());
  }
}
BENCHMARK(BM_SpectralSequence);

}  // namespace

BENCHMARK_MAIN();
