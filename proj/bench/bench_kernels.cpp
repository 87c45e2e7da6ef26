// Serial reference against the OpenMP kernels: the exhaustive Pell oracle and
// the parallel sweep used for base-change and ramification batches.

#include <benchmark/benchmark.h>

#include <random>

#include "pellsurf/oracle.hpp"
#include "pellsurf/ramify.hpp"
#include "pellsurf/surfaces.hpp"
#include "pellsurf/sweep.hpp"

using namespace pellsurf;

namespace {

// The smallest solution for this g has deg y = 11, so bounds up to 10 scan the
// whole candidate space.
PellProblem oracle_problem() {
  Field f = Field::prime(7);
  return PellProblem(Poly::from_ints(f, {0, 2, 3, 5, 1}));
}

void BM_OracleSerial(benchmark::State& st) {
  PellProblem pb = oracle_problem();
  const int bound = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_solve_serial(pb, bound));
}

void BM_OracleParallel(benchmark::State& st) {
  PellProblem pb = oracle_problem();
  const int bound = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_solve(pb, bound));
}

std::vector<std::pair<Poly, Poly>> base_change_batch() {
  Field f = Field::prime(5);
  std::mt19937_64 rng(1);
  std::vector<std::pair<Poly, Poly>> out;
  for (long long a = 0; a < 5; ++a) {
    for (long long b = 0; b < 5; ++b) {
      for (int k = 0; k < 8; ++k) {
        std::vector<Scalar> c;
        for (int i = 0; i < 3; ++i) c.push_back(Scalar::from_int(f, static_cast<long long>(rng() % 5)));
        c.push_back(Scalar::one(f));
        out.emplace_back(Poly::from_ints(f, {a, b, 1}), Poly(f, c));
      }
    }
  }
  return out;
}

auto base_change_item = [](const std::pair<Poly, Poly>& gq) {
  return static_cast<int>(verify_base_change(gq.first, gq.second).status);
};

void BM_BaseChangeSerial(benchmark::State& st) {
  auto batch = base_change_batch();
  for (auto _ : st) benchmark::DoNotOptimize(map_serial(batch, base_change_item));
}

void BM_BaseChangeParallel(benchmark::State& st) {
  auto batch = base_change_batch();
  for (auto _ : st) benchmark::DoNotOptimize(map_parallel(batch, base_change_item));
}

std::vector<Poly> ramification_batch() {
  Field f = Field::rationals();
  std::mt19937_64 rng(2);
  std::vector<Poly> out;
  while (out.size() < 200) {
    std::vector<Scalar> c;
    for (int i = 0; i <= 6; ++i) c.push_back(Scalar::from_int(f, static_cast<long long>(rng() % 9) - 4));
    c.back() = Scalar::one(f);
    out.emplace_back(f, c);
  }
  return out;
}

auto ramification_item = [](const Poly& q) { return ramification_profile(q).total; };

void BM_RamificationSerial(benchmark::State& st) {
  auto batch = ramification_batch();
  for (auto _ : st) benchmark::DoNotOptimize(map_serial(batch, ramification_item));
}

void BM_RamificationParallel(benchmark::State& st) {
  auto batch = ramification_batch();
  for (auto _ : st) benchmark::DoNotOptimize(map_parallel(batch, ramification_item));
}

}  // namespace

BENCHMARK(BM_OracleSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BaseChangeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BaseChangeParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RamificationSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RamificationParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
