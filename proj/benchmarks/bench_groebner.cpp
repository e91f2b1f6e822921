#include <benchmark/benchmark.h>

#include "primegb/corpus.hpp"
#include "primegb/groebner.hpp"

using namespace primegb;

namespace {

void BM_Basis(benchmark::State& state, const char* system, OrderingKind ord, CoeffBackend backend) {
  const PolySystem sys = builtin(system);
  for (auto _ : state) {
    auto r = compute_groebner(sys, ord, backend);
    benchmark::DoNotOptimize(r.basis.data());
    state.counters["size"] = static_cast<double>(r.basis.size());
  }
}

}  // namespace

#define PRIMEGB_CASE(name, id)                                                                              \
  BENCHMARK_CAPTURE(BM_Basis, name##_tdeg_i64, id, OrderingKind::TotalDegree, CoeffBackend::Fixed64)        \
      ->Unit(benchmark::kMillisecond);                                                                      \
  BENCHMARK_CAPTURE(BM_Basis, name##_prime_i64, id, OrderingKind::PrimeBased, CoeffBackend::Fixed64)        \
      ->Unit(benchmark::kMillisecond);                                                                      \
  BENCHMARK_CAPTURE(BM_Basis, name##_tdeg_big, id, OrderingKind::TotalDegree,                               \
                    CoeffBackend::ArbitraryPrecision)                                                       \
      ->Unit(benchmark::kMillisecond);                                                                      \
  BENCHMARK_CAPTURE(BM_Basis, name##_prime_big, id, OrderingKind::PrimeBased,                               \
                    CoeffBackend::ArbitraryPrecision)                                                       \
      ->Unit(benchmark::kMillisecond)

PRIMEGB_CASE(example2, "example-2");
PRIMEGB_CASE(cyclic4, "cyclic-4");
PRIMEGB_CASE(cyclic5, "cyclic-5");
PRIMEGB_CASE(gerdt2, "gerdt-2");
PRIMEGB_CASE(gerdt3, "gerdt-3");
PRIMEGB_CASE(parametric_curve, "parametric-curve");
