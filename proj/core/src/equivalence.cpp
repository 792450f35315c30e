#include "dspp/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include <json.hpp>

#include "dspp/errors.hpp"
#include "dspp/process.hpp"
#include "dspp/stats.hpp"
#include "dspp/transforms.hpp"

namespace dspp {

namespace {

constexpr double kSignificance = 0.001;
constexpr double kSigmaBand = 3.0;
constexpr double kMomentRelTol = 0.02;
constexpr double kAlgebraicTol = 1e-15;
constexpr double kDecompositionTol = 1e-10;
constexpr double kKsEvaluatorSpreadTol = 1e-4;

std::string format_g(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::vector<double> grid_or_default(const VerifyConfig& config) {
  if (!config.theta_grid.empty()) return config.theta_grid;
  return {kStandardThetaGrid.begin(), kStandardThetaGrid.end()};
}

// Compares an empirical LST against an analytic evaluator point by point at
// the 3-standard-error band; the record captures the worst point.
CheckRecord lst_band_check(const std::string& name, const TransformGrid& grid,
                           const std::function<double(double)>& analytic) {
  CheckRecord rec;
  rec.name = name;
  rec.pass = true;
  double worst_ratio = -1.0;
  for (std::size_t i = 0; i < grid.thetas.size(); ++i) {
    const double target = analytic(grid.thetas[i]);
    const double diff = std::abs(grid.values[i] - target);
    const double band = kSigmaBand * grid.stderrs[i];
    const bool ok = diff <= band;
    const double ratio = band > 0.0 ? diff / band : (diff == 0.0 ? 0.0 : 2.0);
    if (!ok) rec.pass = false;
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      rec.target = target;
      rec.estimate = grid.values[i];
      rec.tolerance = band;
      rec.detail = "worst theta=" + format_g(grid.thetas[i]) + ", |z|=" +
                   format_g(band > 0.0 ? kSigmaBand * diff / band : 0.0);
    }
  }
  return rec;
}

CheckRecord ks_check(const std::string& name, const KsResult& ks) {
  CheckRecord rec;
  rec.name = name;
  rec.target = kSignificance;
  rec.estimate = ks.p_value;
  rec.tolerance = 0.0;
  rec.pass = ks.p_value > kSignificance;
  rec.detail = "D=" + format_g(ks.statistic) + ", n=" + std::to_string(ks.n) +
               (ks.m > 0 ? ", m=" + std::to_string(ks.m) : "");
  return rec;
}

}  // namespace

double path_interarrival_sample(const DsppModel& model, RandomStream& rng) {
  const double mu = model.mean_interarrival();
  double horizon = 64.0 * mu;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const IntensityPath path =
        sample_intensity_path(model, horizon, PathInit::FreshOn, rng);
    const EventStream events = thin_events_on_path(path, model.lambda(), rng);
    if (!events.events().empty()) return events.events().front();
    horizon *= 2.0;
  }
  throw ConvergenceFailure("no event in 8 horizon doublings from 64 mu");
}

std::vector<CheckRecord> moment_identity_check(const DsppModel& model,
                                               double horizon, int n_max,
                                               RandomStream& rng) {
  if (n_max < 1) throw InvalidParameter("n_max", "must be >= 1");
  const double mu = model.mean_interarrival();
  const double p_on = model.p_on();

  std::vector<CheckRecord> records;
  {
    // all powers collapse to p_on * lambda * mu = 1
    CheckRecord rec;
    rec.name = "moment_algebraic";
    rec.target = 1.0;
    rec.estimate = p_on * model.lambda() * mu;
    rec.tolerance = kAlgebraicTol;
    rec.pass = std::abs(rec.estimate - 1.0) <= kAlgebraicTol;
    rec.detail = "p_on*lambda^n*mu/lambda^(n-1), n=1.." + std::to_string(n_max);
    records.push_back(std::move(rec));
  }

  const IntensityPath path =
      sample_intensity_path(model, horizon, PathInit::Stationary, rng);
  double on_time = 0.0;
  double elapsed = 0.0;
  for (const auto& seg : path.segments()) {
    const double visible =
        std::min(seg.duration, std::max(0.0, horizon - elapsed));
    if (seg.level > 0.0) on_time += visible;
    elapsed += seg.duration;
    if (elapsed >= horizon) break;
  }
  const double p_on_hat = on_time / horizon;

  for (int n = 1; n <= n_max; ++n) {
    CheckRecord rec;
    rec.name = "moment_time_average_n" + std::to_string(n);
    rec.target = std::pow(model.lambda(), n - 1) / mu;
    rec.estimate = p_on_hat * std::pow(model.lambda(), n);
    rec.tolerance = kMomentRelTol * rec.target;
    rec.pass = std::abs(rec.estimate - rec.target) <= rec.tolerance;
    rec.detail = "time average of Lambda^" + std::to_string(n) + " over " +
                 format_g(horizon) + " (ergodic stand-in for the ensemble moment)";
    records.push_back(std::move(rec));
  }
  return records;
}

EquivalenceReport equivalence_report(const DsppModel& model,
                                     const VerifyConfig& config) {
  EquivalenceReport report;
  report.lambda = model.lambda();
  report.k = model.k();
  report.g = model.off_dist().describe();
  report.seed = config.seed;

  const std::vector<double> grid = grid_or_default(config);
  const double mu = model.mean_interarrival();

  // 1. empirical inter-arrival LST against phi_F
  {
    RandomStream rng(config.seed, 1);
    std::vector<double> draws(config.lst_samples);
    for (auto& d : draws) d = sample_interarrival(model, rng);
    const TransformGrid est = empirical_lst(draws, grid);
    report.checks.push_back(lst_band_check(
        "interarrival_lst", est,
        [&model](double theta) { return phi_F(model, theta); }));
  }

  // 2. two-sample KS: path-based versus direct inter-arrivals; the
  //    negative-control perturbation applies to the direct side only
  {
    RandomStream path_rng(config.seed, 2);
    RandomStream direct_rng(config.seed, 3);
    const DsppModel direct_model(model.lambda(), model.k() * config.perturb_k,
                                 model.off_dist());
    std::vector<double> path_side(config.ks_samples);
    for (auto& d : path_side) d = path_interarrival_sample(model, path_rng);
    std::vector<double> direct_side(config.ks_samples);
    for (auto& d : direct_side) d = sample_interarrival(direct_model, direct_rng);
    report.checks.push_back(ks_check("interarrival_ks_path_vs_direct",
                                     ks_two_sample(path_side, direct_side)));
  }

  // 3. one-sample KS of direct draws against the numerically inverted CDF.
  //    Near the derivative kinks of atom-bearing G the inversion cannot
  //    certify 1e-6; the evaluator accepts a spread up to 1e-4, two orders
  //    below what KS at these sample sizes can resolve.
  {
    RandomStream rng(config.seed, 4);
    std::vector<double> draws(config.inversion_ks_samples);
    for (auto& d : draws) d = sample_interarrival(model, rng);
    double max_spread = 0.0;
    const auto cdf = [&model, &max_spread](double t) {
      if (t <= 0.0) return 0.0;
      const LstInversion inv = invert_lst_to_cdf_diagnostic(model, t);
      if (!std::isfinite(inv.value) || inv.spread > kKsEvaluatorSpreadTol)
        throw ConvergenceFailure("inverted-CDF evaluator inconsistent at t=" +
                                 format_g(t));
      max_spread = std::max(max_spread, inv.spread);
      return std::clamp(inv.value, 0.0, 1.0);
    };
    auto rec = ks_check("interarrival_ks_vs_inverted_cdf",
                        ks_one_sample(draws, cdf));
    rec.detail += ", max inversion spread=" + format_g(max_spread);
    report.checks.push_back(std::move(rec));
  }

  // 4. residual-time LST from a stationary start against (1 - phi_F)/(theta mu)
  {
    RandomStream rng(config.seed, 5);
    std::vector<double> draws(config.residual_samples);
    for (auto& d : draws) d = stationary_first_event_time(model, rng);
    const TransformGrid est = empirical_lst(draws, grid);
    report.checks.push_back(lst_band_check(
        "residual_lst", est,
        [&model](double theta) { return residual_lst(model, theta); }));
  }

  // 5. decomposition identity; no off branch exists when E[Y] = 0
  {
    CheckRecord rec;
    rec.name = "residual_decomposition";
    rec.target = 0.0;
    rec.tolerance = kDecompositionTol;
    if (model.mean_off() == 0.0) {
      rec.skipped = true;
      rec.pass = true;
      rec.detail = "skipped: E[Y] = 0 (no off branch)";
    } else {
      double worst = 0.0;
      double worst_theta = 0.0;
      for (double theta : grid) {
        const double diff = std::abs(residual_lst(model, theta) -
                                     residual_lst_decomposed(model, theta));
        if (diff > worst) {
          worst = diff;
          worst_theta = theta;
        }
      }
      rec.estimate = worst;
      rec.pass = worst <= kDecompositionTol;
      rec.detail = "max |direct - decomposed| at theta=" + format_g(worst_theta);
    }
    report.checks.push_back(std::move(rec));
  }

  // 6. moment identity on a long stationary path
  {
    RandomStream rng(config.seed, 6);
    const double horizon = config.moment_horizon_multiplier * mu;
    auto records = moment_identity_check(model, horizon,
                                         config.moment_max_power, rng);
    for (auto& rec : records) report.checks.push_back(std::move(rec));
  }

  report.overall_pass = std::all_of(
      report.checks.begin(), report.checks.end(),
      [](const CheckRecord& rec) { return rec.pass; });
  return report;
}

std::string EquivalenceReport::to_json() const {
  nlohmann::ordered_json j;
  j["model"]["lambda"] = lambda;
  j["model"]["k"] = k;
  j["model"]["g"] = g;
  j["seed"] = seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& rec : checks) {
    nlohmann::ordered_json c;
    c["name"] = rec.name;
    c["target"] = rec.target;
    c["estimate"] = rec.estimate;
    c["tolerance"] = rec.tolerance;
    c["pass"] = rec.pass;
    c["skipped"] = rec.skipped;
    c["detail"] = rec.detail;
    j["checks"].push_back(std::move(c));
  }
  j["overall_pass"] = overall_pass;
  return j.dump(2) + "\n";
}

std::string EquivalenceReport::to_table() const {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line), "model: lambda=%g k=%g g=%s seed=%llu\n",
                lambda, k, g.c_str(),
                static_cast<unsigned long long>(seed));
  out += line;
  for (const auto& rec : checks) {
    std::snprintf(line, sizeof(line), "%-34s %s  estimate=%-12.6g target=%-12.6g %s\n",
                  rec.name.c_str(),
                  rec.skipped ? "SKIP" : (rec.pass ? "PASS" : "FAIL"),
                  rec.estimate, rec.target, rec.detail.c_str());
    out += line;
  }
  out += overall_pass ? "overall: PASS\n" : "overall: FAIL\n";
  return out;
}

}  // namespace dspp
