#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "primegb/power_product.hpp"

using namespace primegb;

namespace {

const VarTable kVars("xyzt");

std::vector<Exponents> sample(std::size_t n) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Exponent> exp(0, 3);
  std::vector<Exponents> out(n, Exponents(4));
  for (auto& e : out)
    for (auto& x : e) x = exp(rng);
  return out;
}

template <class PP>
std::vector<PP> encoded(std::size_t n) {
  std::vector<PP> out;
  for (const auto& e : sample(n)) out.push_back(PP::from_exponents(e, kVars));
  return out;
}

template <class PP>
void BM_Compare(benchmark::State& state, OrderingKind ord) {
  const auto pps = encoded<PP>(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare(pps[i & 255], pps[(i + 1) & 255], ord, kVars));
    ++i;
  }
}

template <class PP>
void BM_Multiply(benchmark::State& state) {
  const auto pps = encoded<PP>(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(pps[i & 255], pps[(i + 7) & 255]));
    ++i;
  }
}

template <class PP>
void BM_Divides(benchmark::State& state) {
  const auto pps = encoded<PP>(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(divides(pps[i & 255], pps[(i + 3) & 255]));
    ++i;
  }
}

void BM_CompareString(benchmark::State& state) { BM_Compare<ExpandedString>(state, OrderingKind::TotalDegree); }
void BM_CompareVector(benchmark::State& state) { BM_Compare<ExponentVector>(state, OrderingKind::TotalDegree); }
void BM_ComparePrime(benchmark::State& state) { BM_Compare<PrimeImage>(state, OrderingKind::PrimeBased); }

}  // namespace

BENCHMARK(BM_CompareString);
BENCHMARK(BM_CompareVector);
BENCHMARK(BM_ComparePrime);
BENCHMARK_TEMPLATE(BM_Multiply, ExpandedString);
BENCHMARK_TEMPLATE(BM_Multiply, ExponentVector);
BENCHMARK_TEMPLATE(BM_Multiply, PrimeImage);
BENCHMARK_TEMPLATE(BM_Divides, ExpandedString);
BENCHMARK_TEMPLATE(BM_Divides, ExponentVector);
BENCHMARK_TEMPLATE(BM_Divides, PrimeImage);
