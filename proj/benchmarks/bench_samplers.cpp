#include <benchmark/benchmark.h>

#include "dspp/equivalence.hpp"
#include "dspp/model.hpp"
#include "dspp/process.hpp"
#include "dspp/random.hpp"

namespace {

dspp::DsppModel exp_g_model() {
  return dspp::DsppModel(2.0, 1.0, dspp::OffTimeDistribution::exponential(1.0));
}

void BM_DirectInterarrival(benchmark::State& state) {
  const auto model = exp_g_model();
  dspp::RandomStream rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dspp::sample_interarrival(model, rng));
  }
}
BENCHMARK(BM_DirectInterarrival);

void BM_PathInterarrival(benchmark::State& state) {
  const auto model = exp_g_model();
  dspp::RandomStream rng(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dspp::path_interarrival_sample(model, rng));
  }
}
BENCHMARK(BM_PathInterarrival);

void BM_RenewalStreamPerUnitTime(benchmark::State& state) {
  const auto model = exp_g_model();
  dspp::RandomStream rng(3);
  const double horizon = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dspp::simulate_renewal_stream(model, horizon, rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RenewalStreamPerUnitTime)->Arg(1000)->Arg(10000);

void BM_PathThinning(benchmark::State& state) {
  const auto model = exp_g_model();
  dspp::RandomStream rng(4);
  const double horizon = static_cast<double>(state.range(0));
  for (auto _ : state) {
    const auto path = dspp::sample_intensity_path(model, horizon,
                                                  dspp::PathInit::Stationary, rng);
    benchmark::DoNotOptimize(
        dspp::thin_events_on_path(path, model.lambda(), rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PathThinning)->Arg(1000)->Arg(10000);

void BM_GammaOffSample(benchmark::State& state) {
  const auto dist = dspp::OffTimeDistribution::gamma(2.0, 2.0);
  dspp::RandomStream rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist.sample(rng));
  }
}
BENCHMARK(BM_GammaOffSample);

void BM_EquilibriumResidualGamma(benchmark::State& state) {
  const auto dist = dspp::OffTimeDistribution::gamma(2.0, 2.0);
  dspp::RandomStream rng(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist.equilibrium_residual_sample(rng));
  }
}
BENCHMARK(BM_EquilibriumResidualGamma);

}  // namespace
