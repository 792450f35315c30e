#include <benchmark/benchmark.h>

#include <vector>

#include "dspp/model.hpp"
#include "dspp/random.hpp"
#include "dspp/stats.hpp"
#include "dspp/transforms.hpp"

namespace {

dspp::DsppModel hyperexp_model() {
  return dspp::DsppModel(
      2.0, 1.0, dspp::OffTimeDistribution::hyperexponential({0.4, 0.6}, {1.0, 3.0}));
}

void BM_PhiF(benchmark::State& state) {
  const auto model = hyperexp_model();
  double theta = 0.0;
  for (auto _ : state) {
    theta += 0.001;
    benchmark::DoNotOptimize(dspp::phi_F(model, theta));
  }
}
BENCHMARK(BM_PhiF);

void BM_InvertLstToCdf(benchmark::State& state) {
  const auto model = hyperexp_model();
  double t = 0.0;
  for (auto _ : state) {
    t = t >= 5.0 ? 0.1 : t + 0.1;
    benchmark::DoNotOptimize(dspp::invert_lst_to_cdf(model, t));
  }
}
BENCHMARK(BM_InvertLstToCdf);

void BM_KsTwoSample(benchmark::State& state) {
  dspp::RandomStream rng(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> a(n), b(n);
  for (auto& x : a) x = rng.exponential(1.0);
  for (auto& x : b) x = rng.exponential(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dspp::ks_two_sample(a, b));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KsTwoSample)->Arg(10000)->Arg(100000);

void BM_EmpiricalLst(benchmark::State& state) {
  dspp::RandomStream rng(8);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> draws(n);
  for (auto& x : draws) x = rng.exponential(1.0);
  const std::vector<double> grid(dspp::kStandardThetaGrid.begin(),
                                 dspp::kStandardThetaGrid.end());
  for (auto _ : state) {
    benchmark::DoNotOptimize(dspp::empirical_lst(draws, grid));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EmpiricalLst)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
