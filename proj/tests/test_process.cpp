#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "dspp/equivalence.hpp"
#include "dspp/errors.hpp"
#include "dspp/process.hpp"
#include "dspp/stats.hpp"
#include "oracles.hpp"

using dspp::DsppModel;
using dspp::OffTimeDistribution;

namespace {

DsppModel exp_g_model() {
  return DsppModel(2.0, 1.0, OffTimeDistribution::exponential(1.0));
}

DsppModel poisson_model(double lambda) {
  return DsppModel(lambda, 1.0, OffTimeDistribution::degenerate_at_zero());
}

struct NamedModel {
  const char* name;
  DsppModel model;
  std::uint64_t seed;
};

std::vector<NamedModel> family_models() {
  return {
      {"degenerate", poisson_model(2.0), 501},
      {"deterministic", DsppModel(2.0, 1.0, OffTimeDistribution::deterministic(1.0)), 502},
      {"exponential", exp_g_model(), 503},
      {"gamma", DsppModel(2.0, 1.0, OffTimeDistribution::gamma(2.0, 2.0)), 504},
      {"hyperexponential",
       DsppModel(2.0, 1.0, OffTimeDistribution::hyperexponential({0.4, 0.6}, {1.0, 3.0})), 505},
      {"empirical",
       DsppModel(2.0, 1.0, OffTimeDistribution::empirical({0.0, 0.5, 1.5, 2.0, 3.0})), 506},
  };
}

}  // namespace

TEST_SUITE("process") {

TEST_CASE("model validation and derived quantities") {
  CHECK_THROWS_AS(DsppModel(0.0, 1.0, OffTimeDistribution::degenerate_at_zero()),
                  dspp::InvalidParameter);
  CHECK_THROWS_AS(DsppModel(1.0, -1.0, OffTimeDistribution::degenerate_at_zero()),
                  dspp::InvalidParameter);

  const auto m = exp_g_model();
  CHECK(m.mean_interarrival() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(m.p_on() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(poisson_model(2.0).mean_interarrival() == doctest::Approx(0.5).epsilon(1e-15));

  for (const auto& nm : family_models()) {
    const double identity =
        nm.model.p_on() * nm.model.lambda() * nm.model.mean_interarrival();
    CHECK(std::abs(identity - 1.0) <= 1e-15);
  }
}

TEST_CASE("degenerate off-times leave the intensity effectively constant") {
  dspp::RandomStream rng(510);
  const auto path = dspp::sample_intensity_path(poisson_model(1.0), 10.0,
                                                dspp::PathInit::FreshOn, rng);
  CHECK(path.starts_on());
  for (const auto& seg : path.segments()) {
    if (seg.level == 0.0) CHECK(seg.duration == 0.0);
  }
}

TEST_CASE("path levels strictly alternate and cover the horizon") {
  dspp::RandomStream rng(511);
  const auto model = exp_g_model();
  const auto path =
      dspp::sample_intensity_path(model, 10.0, dspp::PathInit::FreshOn, rng);
  double total = 0.0;
  bool prev_on = false;
  for (std::size_t i = 0; i < path.segments().size(); ++i) {
    const bool on = path.segments()[i].level > 0.0;
    if (i == 0) {
      CHECK(on);
    } else {
      CHECK(on != prev_on);
    }
    prev_on = on;
    total += path.segments()[i].duration;
  }
  CHECK(total >= 10.0);
}

TEST_CASE("stationary start is on with probability p_on") {
  dspp::RandomStream rng(512);
  const auto model = exp_g_model();  // p_on = 1/2
  const int n = 100000;
  int on = 0;
  for (int i = 0; i < n; ++i) {
    const auto path =
        dspp::sample_intensity_path(model, 0.5, dspp::PathInit::Stationary, rng);
    if (path.starts_on()) ++on;
  }
  CHECK(std::abs(static_cast<double>(on) / n - 0.5) <= 3.0 * 0.5 / 316.0);
}

TEST_CASE("stationary start with degenerate G is always on") {
  dspp::RandomStream rng(513);
  for (int i = 0; i < 200; ++i) {
    const auto path = dspp::sample_intensity_path(poisson_model(2.0), 1.0,
                                                  dspp::PathInit::Stationary, rng);
    CHECK(path.starts_on());
  }
}

TEST_CASE("thinning an off-only path yields nothing") {
  dspp::RandomStream rng(514);
  const dspp::IntensityPath off_path({{0.0, 5.0}}, 5.0);
  const auto events = dspp::thin_events_on_path(off_path, 3.0, rng);
  CHECK(events.events().empty());
}

TEST_CASE("thinning a constant-intensity path gives Poisson counts") {
  dspp::RandomStream rng(515);
  const auto path = dspp::sample_intensity_path(poisson_model(3.0), 1000.0,
                                                dspp::PathInit::FreshOn, rng);
  const auto events = dspp::thin_events_on_path(path, 3.0, rng);
  const double expected = 3000.0;
  CHECK(std::abs(static_cast<double>(events.size()) - expected) <=
        3.0 * std::sqrt(expected));
}

TEST_CASE("no event epoch falls inside an off-segment") {
  dspp::RandomStream rng(516);
  const auto model =
      DsppModel(2.0, 1.0, OffTimeDistribution::deterministic(1.0));
  const auto path =
      dspp::sample_intensity_path(model, 200.0, dspp::PathInit::FreshOn, rng);
  const auto events = dspp::thin_events_on_path(path, 2.0, rng);
  CHECK(events.size() > 0);
  std::size_t idx = 0;
  double start = 0.0;
  for (const auto& seg : path.segments()) {
    const double end = start + seg.duration;
    while (idx < events.size() && events.events()[idx] < end) {
      CHECK(seg.level > 0.0);
      ++idx;
    }
    start = end;
  }
}

TEST_CASE("thinning rejects a path with a foreign level") {
  dspp::RandomStream rng(517);
  const dspp::IntensityPath path({{2.5, 1.0}}, 1.0);
  CHECK_THROWS_AS(dspp::thin_events_on_path(path, 3.0, rng),
                  dspp::InvalidParameter);
}

TEST_CASE("direct inter-arrival sampler hits the analytic mean") {
  const int n = 1000000;
  {
    dspp::RandomStream rng(518);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += dspp::sample_interarrival(poisson_model(2.0), rng);
    CHECK(std::abs(sum / n - 0.5) <= 3.0 * 0.5 / 1000.0);  // T ~ Exponential(2)
  }
  {
    dspp::RandomStream rng(519);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += dspp::sample_interarrival(exp_g_model(), rng);
    // sd(T) = sqrt(E[T^2] - mu^2) = sqrt(3 - 1) from the phi_F'' oracle
    CHECK(std::abs(sum / n - 1.0) <= 3.0 * std::sqrt(2.0) / 1000.0);
  }
}

TEST_CASE("documented draw order: geometric count, failure rounds, final on-time") {
  const auto model = exp_g_model();
  const double total_rate = model.lambda() + model.k();
  for (std::uint64_t seed = 600; seed < 640; ++seed) {
    dspp::RandomStream rng(seed);
    dspp::RandomStream replay(seed);
    const double draw = dspp::sample_interarrival(model, rng);
    const double u = replay.next_double();
    const auto n = static_cast<std::uint64_t>(
        std::floor(std::log(u) / std::log(model.k() / total_rate)));
    double expected = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
      expected += replay.exponential(total_rate);
      expected += model.off_dist().sample(replay);
    }
    expected += replay.exponential(total_rate);
    CHECK(draw == expected);  // bit-exact, including the empty-sum N = 0 case
  }
}

TEST_CASE("renewal stream truncates at the horizon") {
  const auto model = exp_g_model();
  dspp::RandomStream probe(520);
  const double first = dspp::sample_interarrival(model, probe);
  dspp::RandomStream rng(520);
  const auto empty = dspp::simulate_renewal_stream(model, first * 0.5, rng);
  CHECK(empty.events().empty());

  dspp::RandomStream rng2(521);
  const auto stream = dspp::simulate_renewal_stream(poisson_model(3.0), 1000.0, rng2);
  CHECK(std::abs(static_cast<double>(stream.size()) - 3000.0) <=
        3.0 * std::sqrt(3000.0));
  for (std::size_t i = 1; i < stream.events().size(); ++i)
    CHECK(stream.events()[i] > stream.events()[i - 1]);
}

TEST_CASE("stationary first event for the Poisson case is exponential") {
  dspp::RandomStream rng(522);
  std::vector<double> draws(100000);
  for (auto& d : draws) d = dspp::stationary_first_event_time(poisson_model(2.0), rng);
  const auto ks = dspp::ks_one_sample(
      draws, [](double x) { return oracles::exponential_cdf(2.0, x); });
  CHECK(ks.p_value > 0.001);
}

TEST_CASE("stationary first event matches the residual transform at theta=1") {
  dspp::RandomStream rng(523);
  const auto model = exp_g_model();
  std::vector<double> draws(1000000);
  for (auto& d : draws) {
    d = dspp::stationary_first_event_time(model, rng);
    CHECK(d >= 0.0);
  }
  const std::vector<double> thetas{1.0};
  const auto grid = dspp::empirical_lst(draws, thetas);
  // (1 - phi_F(1)) / (1 * mu) = 3/7
  CHECK(std::abs(grid.values[0] - 3.0 / 7.0) <= 3.0 * grid.stderrs[0]);
}

TEST_CASE("path-based and direct inter-arrivals agree for every family") {
  for (const auto& nm : family_models()) {
    INFO("family ", nm.name);
    dspp::RandomStream path_rng(nm.seed);
    dspp::RandomStream direct_rng(nm.seed + 1000);
    const int n = 100000;
    std::vector<double> path_side(n), direct_side(n);
    for (auto& d : path_side) d = dspp::path_interarrival_sample(nm.model, path_rng);
    for (auto& d : direct_side) d = dspp::sample_interarrival(nm.model, direct_rng);
    const auto ks = dspp::ks_two_sample(path_side, direct_side);
    CHECK(ks.p_value > 0.001);
  }
}

TEST_CASE("degenerate G reduces the inter-arrival law to Exponential(lambda)") {
  dspp::RandomStream rng(524);
  std::vector<double> draws(100000);
  for (auto& d : draws) d = dspp::sample_interarrival(poisson_model(2.0), rng);
  const auto ks = dspp::ks_one_sample(
      draws, [](double x) { return oracles::exponential_cdf(2.0, x); });
  CHECK(ks.p_value > 0.001);
}

TEST_CASE("event stream construction enforces its invariants") {
  CHECK_NOTHROW(dspp::EventStream({0.0, 0.5, 0.9}, 1.0));
  CHECK_THROWS_AS(dspp::EventStream({0.5, 1.0}, 1.0), dspp::InvalidParameter);
  CHECK_THROWS_AS(dspp::EventStream({-0.1}, 1.0), dspp::InvalidParameter);
  CHECK_THROWS_AS(dspp::EventStream({0.3, 0.3}, 1.0), dspp::InvalidParameter);
  CHECK_THROWS_AS(dspp::EventStream({0.4, 0.3}, 1.0), dspp::InvalidParameter);
  CHECK_THROWS_AS(dspp::IntensityPath({{2.0, 0.5}, {2.0, 0.5}}, 1.0),
                  dspp::InvalidParameter);
  CHECK_THROWS_AS(dspp::IntensityPath({{2.0, 0.25}}, 1.0),
                  dspp::InvalidParameter);
}

TEST_CASE("renewal stream is the running sum of documented draws") {
  const auto model = exp_g_model();
  dspp::RandomStream rng(525);
  const auto stream = dspp::simulate_renewal_stream(model, 50.0, rng);
  dspp::RandomStream replay(525);
  double t = 0.0;
  for (double epoch : stream.events()) {
    t += dspp::sample_interarrival(model, replay);
    CHECK(epoch == t);  // bit-exact
  }
  // the draw that crossed the horizon was consumed and discarded
  t += dspp::sample_interarrival(model, replay);
  CHECK(t >= 50.0);
}

TEST_CASE("split substreams reproduce sequential draws across threads") {
  const auto model = exp_g_model();
  const dspp::RandomStream root(526);
  const int workers = 4;
  const int per_worker = 2000;
  std::vector<std::vector<double>> sequential(workers);
  for (int w = 0; w < workers; ++w) {
    dspp::RandomStream rng = root.split(static_cast<std::uint64_t>(w));
    sequential[w].resize(per_worker);
    for (auto& d : sequential[w]) d = dspp::sample_interarrival(model, rng);
  }
  std::vector<std::vector<double>> parallel(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      dspp::RandomStream rng = root.split(static_cast<std::uint64_t>(w));
      parallel[w].resize(per_worker);
      for (auto& d : parallel[w]) d = dspp::sample_interarrival(model, rng);
    });
  }
  for (auto& th : pool) th.join();
  CHECK(parallel == sequential);
}

TEST_CASE("both simulators generate events at rate 1/mu") {
  for (const auto& nm : family_models()) {
    INFO("family ", nm.name);
    const double mu = nm.model.mean_interarrival();
    const double horizon = 1e5 * mu;
    const double expected = horizon / mu;  // = 1e5
    const double band = 3.0 * std::sqrt(expected);
    {
      dspp::RandomStream rng(nm.seed + 2000);
      const auto stream = dspp::simulate_renewal_stream(nm.model, horizon, rng);
      CHECK(std::abs(static_cast<double>(stream.size()) - expected) <= band);
    }
    {
      dspp::RandomStream rng(nm.seed + 3000);
      const auto path = dspp::sample_intensity_path(nm.model, horizon,
                                                    dspp::PathInit::Stationary, rng);
      const auto stream = dspp::thin_events_on_path(path, nm.model.lambda(), rng);
      CHECK(std::abs(static_cast<double>(stream.size()) - expected) <= band);
    }
  }
}

}  // TEST_SUITE
