// Command-line front end: simulate | transform | decompose | verify | invert.
// Configs are strict JSON; data goes to CSV/JSON files, stdout carries only
// summary lines, so the commands compose in scripts.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dspp/csv.hpp"
#include "dspp/equivalence.hpp"
#include "dspp/errors.hpp"
#include "dspp/model.hpp"
#include "dspp/process.hpp"
#include "dspp/random.hpp"
#include "dspp/stats.hpp"
#include "dspp/transforms.hpp"

namespace {

using nlohmann::json;

struct ModelConfig {
  double lambda = 0.0;
  double k = 0.0;
  dspp::OffTimeDistribution g = dspp::OffTimeDistribution::degenerate_at_zero();
  std::uint64_t seed = 0;
  std::vector<double> grid;  // optional theta grid
};

[[noreturn]] void config_fail(const std::string& field, const std::string& why) {
  throw dspp::InvalidParameter(field, why);
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& prefix) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) config_fail(prefix + it.key(), "unknown field");
  }
}

double positive_number(const json& obj, const std::string& key,
                       const std::string& field) {
  if (!obj.contains(key)) config_fail(field, "missing");
  const json& j = obj.at(key);
  if (!j.is_number()) config_fail(field, "must be a number");
  const double v = j.get<double>();
  if (!(v > 0.0) || !std::isfinite(v)) config_fail(field, "must be finite and > 0");
  return v;
}

std::vector<double> number_array(const json& obj, const std::string& key,
                                 const std::string& field) {
  if (!obj.contains(key)) config_fail(field, "missing");
  const json& j = obj.at(key);
  if (!j.is_array() || j.empty()) config_fail(field, "must be a non-empty array");
  std::vector<double> out;
  for (const auto& e : j) {
    if (!e.is_number()) config_fail(field, "entries must be numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

dspp::OffTimeDistribution parse_g(const json& g,
                                  const std::filesystem::path& config_dir) {
  if (!g.is_object()) config_fail("g", "must be an object");
  if (!g.contains("family")) config_fail("g.family", "missing");
  if (!g.at("family").is_string()) config_fail("g.family", "must be a string");
  const std::string family = g.at("family").get<std::string>();
  try {
    if (family == "degenerate_at_zero") {
      check_keys(g, {"family"}, "g.");
      return dspp::OffTimeDistribution::degenerate_at_zero();
    }
    if (family == "deterministic") {
      check_keys(g, {"family", "d"}, "g.");
      return dspp::OffTimeDistribution::deterministic(
          positive_number(g, "d", "g.d"));
    }
    if (family == "exponential") {
      check_keys(g, {"family", "rate"}, "g.");
      return dspp::OffTimeDistribution::exponential(
          positive_number(g, "rate", "g.rate"));
    }
    if (family == "gamma") {
      check_keys(g, {"family", "shape", "rate"}, "g.");
      return dspp::OffTimeDistribution::gamma(
          positive_number(g, "shape", "g.shape"),
          positive_number(g, "rate", "g.rate"));
    }
    if (family == "hyperexponential") {
      check_keys(g, {"family", "weights", "rates"}, "g.");
      return dspp::OffTimeDistribution::hyperexponential(
          number_array(g, "weights", "g.weights"),
          number_array(g, "rates", "g.rates"));
    }
    if (family == "empirical") {
      check_keys(g, {"family", "csv", "samples"}, "g.");
      if (g.contains("csv") == g.contains("samples"))
        config_fail("g.csv", "empirical needs exactly one of csv or samples");
      if (g.contains("csv")) {
        if (!g.at("csv").is_string()) config_fail("g.csv", "must be a path string");
        std::filesystem::path p = g.at("csv").get<std::string>();
        if (p.is_relative()) p = config_dir / p;
        return dspp::OffTimeDistribution::empirical(
            dspp::csv::read_duration_column(p));
      }
      return dspp::OffTimeDistribution::empirical(
          number_array(g, "samples", "g.samples"));
    }
  } catch (const dspp::InvalidParameter& e) {
    if (e.field().rfind("g.", 0) == 0) throw;
    throw dspp::InvalidParameter("g." + e.field(), e.why());
  }
  config_fail("g.family", "unknown family \"" + family + "\"");
}

ModelConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw dspp::IoError("cannot open config " + path.string());
  json root;
  try {
    root = json::parse(in);
  } catch (const json::exception& e) {
    config_fail("json", e.what());
  }
  if (!root.is_object()) config_fail("json", "top level must be an object");
  check_keys(root, {"lambda", "k", "g", "seed", "grid"}, "");
  ModelConfig cfg;
  cfg.lambda = positive_number(root, "lambda", "lambda");
  cfg.k = positive_number(root, "k", "k");
  if (!root.contains("g")) config_fail("g", "missing");
  cfg.g = parse_g(root.at("g"), path.parent_path());
  if (!root.contains("seed")) config_fail("seed", "missing");
  if (!root.at("seed").is_number_unsigned())
    config_fail("seed", "must be an unsigned integer");
  cfg.seed = root.at("seed").get<std::uint64_t>();
  if (root.contains("grid")) {
    cfg.grid = number_array(root, "grid", "grid");
    double prev = -1.0;
    for (double t : cfg.grid) {
      if (t < 0.0) config_fail("grid", "theta values must be >= 0");
      if (t <= prev) config_fail("grid", "theta values must be strictly increasing");
      prev = t;
    }
  }
  return cfg;
}

std::vector<double> parse_value_list(const std::string& text,
                                     const std::string& field) {
  std::vector<double> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(token, &pos));
      if (pos != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      config_fail(field, "not a number: \"" + token + "\"");
    }
  }
  if (out.empty()) config_fail(field, "empty list");
  return out;
}

std::vector<double> resolve_theta_grid(const std::string& grid_flag,
                                       const ModelConfig& cfg) {
  std::vector<double> grid;
  if (!grid_flag.empty()) {
    grid = parse_value_list(grid_flag, "grid");
    double prev = -1.0;
    for (double t : grid) {
      if (t < 0.0) config_fail("grid", "theta values must be >= 0");
      if (t <= prev) config_fail("grid", "theta values must be strictly increasing");
      prev = t;
    }
  } else if (!cfg.grid.empty()) {
    grid = cfg.grid;
  } else {
    grid.assign(dspp::kStandardThetaGrid.begin(), dspp::kStandardThetaGrid.end());
  }
  return grid;
}

std::string summary_line(std::size_t count, double mean, double rate) {
  std::string out = "count=" + std::to_string(count);
  out += " mean=" + dspp::csv::format_double(mean);
  out += " rate=" + dspp::csv::format_double(rate);
  out += "\n";
  return out;
}

int cmd_simulate(const ModelConfig& cfg, const std::string& mode,
                 double horizon, std::uint64_t count, const std::string& route,
                 const std::string& init, const std::filesystem::path& out) {
  const dspp::DsppModel model(cfg.lambda, cfg.k, cfg.g);
  dspp::RandomStream rng(cfg.seed);
  const dspp::PathInit path_init = init == "stationary"
                                       ? dspp::PathInit::Stationary
                                       : dspp::PathInit::FreshOn;
  if (mode == "interarrivals") {
    if (count == 0) config_fail("count", "must be > 0 for interarrivals mode");
    std::vector<double> draws(count);
    for (auto& d : draws) d = dspp::sample_interarrival(model, rng);
    dspp::csv::write_column("interarrival", draws, out);
    double mean = 0.0;
    for (double d : draws) mean += d;
    mean /= static_cast<double>(draws.size());
    std::cout << summary_line(draws.size(), mean, 1.0 / mean);
    return 0;
  }
  if (!(horizon > 0.0)) config_fail("horizon", "must be > 0 for this mode");
  if (mode == "path") {
    const auto path = dspp::sample_intensity_path(model, horizon, path_init, rng);
    dspp::csv::write_path(path, out);
    double mean = 0.0;
    for (const auto& seg : path.segments()) mean += seg.duration;
    mean /= static_cast<double>(path.segments().size());
    std::cout << summary_line(path.segments().size(), mean,
                              static_cast<double>(path.segments().size()) / horizon);
    return 0;
  }
  // events
  dspp::EventStream stream = [&] {
    if (route == "path") {
      const auto path = dspp::sample_intensity_path(model, horizon, path_init, rng);
      return dspp::thin_events_on_path(path, model.lambda(), rng);
    }
    return dspp::simulate_renewal_stream(model, horizon, rng);
  }();
  dspp::csv::write_events(stream, out);
  const std::size_t n = stream.size();
  double mean_gap = 0.0;
  if (n >= 2)
    mean_gap = (stream.events().back() - stream.events().front()) /
               static_cast<double>(n - 1);
  std::cout << summary_line(n, mean_gap, static_cast<double>(n) / horizon);
  return 0;
}

int cmd_transform(const ModelConfig& cfg, const std::string& which,
                  const std::string& grid_flag,
                  const std::filesystem::path& out) {
  const dspp::DsppModel model(cfg.lambda, cfg.k, cfg.g);
  dspp::TransformGrid grid;
  grid.thetas = resolve_theta_grid(grid_flag, cfg);
  grid.values.reserve(grid.thetas.size());
  for (double theta : grid.thetas) {
    if (which == "phiF") {
      grid.values.push_back(dspp::phi_F(model, theta));
    } else if (which == "phiG") {
      grid.values.push_back(model.off_dist().lst(theta));
    } else {
      grid.values.push_back(dspp::residual_lst(model, theta));
    }
  }
  dspp::csv::write_grid(grid, out);
  std::cout << "count=" << grid.thetas.size() << " which=" << which << "\n";
  return 0;
}

int cmd_decompose(const std::filesystem::path& in_csv, double lambda, double k,
                  const std::filesystem::path& out) {
  if (!(lambda > 0.0)) config_fail("lambda", "must be > 0");
  if (!(k > 0.0)) config_fail("k", "must be > 0");
  const dspp::TransformGrid input = dspp::csv::read_grid(in_csv);
  for (std::size_t i = 0; i < input.values.size(); ++i) {
    if (!(input.values[i] > 0.0) || input.values[i] > 1.0)
      config_fail("csv", "value " + dspp::csv::format_double(input.values[i]) +
                             " at theta=" +
                             dspp::csv::format_double(input.thetas[i]) +
                             " outside (0, 1]");
  }
  dspp::TransformGrid recovered;
  recovered.thetas = input.thetas;
  recovered.values.reserve(input.thetas.size());
  for (std::size_t i = 0; i < input.thetas.size(); ++i) {
    const double value = input.values[i];
    recovered.values.push_back(dspp::recover_phi_G(
        [value](double) { return value; }, lambda, k, input.thetas[i]));
  }
  dspp::csv::write_grid(recovered, out);
  const dspp::LstDiagnostics diag = dspp::check_valid_lst(recovered);
  if (diag.ok()) {
    std::cout << "diagnostics: ok (" << recovered.thetas.size() << " points)\n";
    return 0;
  }
  for (const auto& v : diag.violations) {
    std::cout << "violation: " << v.kind << " at theta="
              << dspp::csv::format_double(recovered.thetas[v.index]) << ": "
              << v.detail << "\n";
  }
  return 4;
}

int cmd_verify(const ModelConfig& cfg, const std::string& grid_flag,
               const dspp::VerifyConfig& sizes,
               const std::filesystem::path& out) {
  const dspp::DsppModel model(cfg.lambda, cfg.k, cfg.g);
  dspp::VerifyConfig vc = sizes;
  vc.seed = cfg.seed;
  vc.theta_grid = resolve_theta_grid(grid_flag, cfg);
  const dspp::EquivalenceReport report = dspp::equivalence_report(model, vc);
  dspp::csv::write_text_atomic(out, report.to_json());
  std::cout << report.to_table();
  return report.overall_pass ? 0 : 5;
}

int cmd_invert(const ModelConfig& cfg, const std::string& times_flag,
               const std::filesystem::path& out) {
  const dspp::DsppModel model(cfg.lambda, cfg.k, cfg.g);
  std::vector<double> times = times_flag.empty()
                                  ? std::vector<double>{0.1, 0.5, 1.0, 2.0, 5.0}
                                  : parse_value_list(times_flag, "times");
  for (double t : times) {
    if (!(t > 0.0)) config_fail("times", "t values must be > 0");
  }
  std::string content = "t,F\n";
  for (double t : times) {
    content += dspp::csv::format_double(t);
    content += ',';
    content += dspp::csv::format_double(dspp::invert_lst_to_cdf(model, t));
    content += '\n';
  }
  dspp::csv::write_text_atomic(out, content);
  std::cout << "count=" << times.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"on-off conditional Poisson / renewal process toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string grid_flag;
  std::uint64_t seed_flag = 0;

  auto add_common = [&](CLI::App* sub, bool with_config = true) {
    if (with_config)
      sub->add_option("--config", config_path, "JSON model config")->required();
    sub->add_option("--out", out_path, "output file")->required();
    sub->add_option("--seed", seed_flag, "override the config seed");
    sub->add_option("--grid", grid_flag, "comma-separated theta grid");
  };

  auto* simulate = app.add_subcommand("simulate", "write a simulated stream");
  std::string mode = "events";
  std::string route = "direct";
  std::string init = "fresh-on";
  double horizon = 0.0;
  std::uint64_t count = 0;
  simulate->add_option("--mode", mode, "events | path | interarrivals")
      ->check(CLI::IsMember({"events", "path", "interarrivals"}));
  simulate->add_option("--horizon", horizon, "time horizon (events, path)");
  simulate->add_option("--count", count, "number of draws (interarrivals)");
  simulate->add_option("--route", route, "events route: direct | path")
      ->check(CLI::IsMember({"direct", "path"}));
  simulate->add_option("--init", init, "path start: fresh-on | stationary")
      ->check(CLI::IsMember({"fresh-on", "stationary"}));
  add_common(simulate);

  auto* transform = app.add_subcommand("transform", "evaluate a transform grid");
  std::string which = "phiF";
  transform->add_option("--which", which, "phiF | phiG | residual")
      ->check(CLI::IsMember({"phiF", "phiG", "residual"}));
  add_common(transform);

  auto* decompose =
      app.add_subcommand("decompose", "recover phi_G from a phi_F grid");
  std::string in_csv;
  double dec_lambda = 0.0;
  double dec_k = 0.0;
  decompose->add_option("--in", in_csv, "phi_F CSV (theta,value)")->required();
  decompose->add_option("--lambda", dec_lambda, "on level")->required();
  decompose->add_option("--k", dec_k, "on-time rate")->required();
  decompose->add_option("--out", out_path, "output file")->required();

  auto* verify = app.add_subcommand("verify", "run the equivalence report");
  dspp::VerifyConfig sizes;
  verify->add_option("--lst-n", sizes.lst_samples, "inter-arrival LST sample size");
  verify->add_option("--ks-n", sizes.ks_samples, "two-sample KS size");
  verify->add_option("--residual-n", sizes.residual_samples,
                     "residual LST sample size");
  verify->add_option("--invert-ks-n", sizes.inversion_ks_samples,
                     "one-sample KS size for the inverted CDF");
  verify->add_option("--moment-mult", sizes.moment_horizon_multiplier,
                     "moment-check horizon in units of mu");
  verify->add_option("--perturb-k", sizes.perturb_k,
                     "scale k in the direct sampler (negative control)")
      ->group("");  // hidden
  add_common(verify);

  auto* invert = app.add_subcommand("invert", "numerically invert phi_F to F(t)");
  std::string times_flag;
  invert->add_option("--times", times_flag, "comma-separated t grid");
  add_common(invert);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ModelConfig cfg;
    if (!app.got_subcommand(decompose)) {
      cfg = load_config(config_path);
      for (auto* sub : app.get_subcommands()) {
        if (sub->count("--seed") > 0) cfg.seed = seed_flag;
      }
    }
    if (app.got_subcommand(simulate))
      return cmd_simulate(cfg, mode, horizon, count, route, init, out_path);
    if (app.got_subcommand(transform))
      return cmd_transform(cfg, which, grid_flag, out_path);
    if (app.got_subcommand(decompose))
      return cmd_decompose(in_csv, dec_lambda, dec_k, out_path);
    if (app.got_subcommand(verify))
      return cmd_verify(cfg, grid_flag, sizes, out_path);
    if (app.got_subcommand(invert))
      return cmd_invert(cfg, times_flag, out_path);
    return 2;
  } catch (const dspp::ConvergenceFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  } catch (const dspp::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const dspp::InvalidParameter& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
}
