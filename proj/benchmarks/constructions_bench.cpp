#include <memory>

#include <benchmark/benchmark.h>

#include "cyclohecke/idempotents.hpp"
#include "cyclohecke/periodicity.hpp"
#include "cyclohecke/regrep.hpp"

using namespace cyclo;
using hecke::AlgebraParams;

namespace {

// Index 0: deg p=2 n=3 kappa=(0,1), D = 48. Index 1: q of order 3 in GF(4), same shape.
const regrep::RegularRep& instance(int which) {
  static const auto deg = regrep::RegularRep::build(
      hecke::Algebra::create(AlgebraParams::degenerate(2, 3, {0, 1})));
  static const auto nondeg = regrep::RegularRep::build(
      hecke::Algebra::create(AlgebraParams::nondegenerate(2, 3, 3, {0, 1})));
  return which == 0 ? *deg : *nondeg;
}

std::vector<unsigned> exponents(const regrep::RegularRep& rep) {
  std::vector<unsigned> l;
  for (unsigned r = 1; r <= rep.n(); ++r) l.push_back(period::nilpotency(rep, r).l);
  return l;
}

void BM_Spectral(benchmark::State& state) {
  const auto& rep = instance(static_cast<int>(state.range(0)));
  const auto support = idem::residue_support(rep);
  for (auto _ : state) {
    for (const auto& seq : support) benchmark::DoNotOptimize(idem::e_spectral(rep, seq));
  }
}

void BM_Interpolation(benchmark::State& state) {
  const auto& rep = instance(static_cast<int>(state.range(0)));
  const auto support = idem::residue_support(rep);
  for (auto _ : state) {
    for (const auto& seq : support) {
      benchmark::DoNotOptimize(idem::e_interpolation(rep.algebra(), seq, rep.dimension()));
    }
  }
}

void BM_Closed(benchmark::State& state) {
  const auto& rep = instance(static_cast<int>(state.range(0)));
  const auto support = idem::residue_support(rep);
  const auto l = exponents(rep);
  for (auto _ : state) {
    for (const auto& seq : support) benchmark::DoNotOptimize(idem::e_closed(rep.algebra(), seq, l));
  }
}

void BM_Multiply(benchmark::State& state) {
  const auto& alg = instance(static_cast<int>(state.range(0))).algebra();
  const auto a = alg.gen_X(3) * alg.gen_T(1) * alg.gen_X(2) + alg.gen_T(2);
  const auto b = alg.gen_T(2) * alg.gen_X(1) * alg.gen_T(1) + alg.gen_X(3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void BM_BuildRegular(benchmark::State& state) {
  const auto params = AlgebraParams::degenerate(2, static_cast<unsigned>(state.range(0)), {0, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(regrep::RegularRep::build(hecke::Algebra::create(params)));
  }
}

}  // namespace

BENCHMARK(BM_Spectral)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Interpolation)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Closed)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Multiply)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BuildRegular)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
