#include "dspp/transforms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

#include "dspp/errors.hpp"
#include "dspp/laplace_inversion.hpp"

namespace dspp {

namespace {

// Crossover below which the residual LST switches to its series in theta.
constexpr double kResidualSeriesThreshold = 1e-8;

// Order-pair ladder for the inversion consistency check; a rung is accepted
// when its two accelerations agree within the tolerance.
constexpr std::array<std::pair<int, int>, 3> kInvertLadder{
    {{32, 44}, {48, 64}, {72, 96}}};
constexpr double kInvertConsistencyTol = 1e-6;

// Second moment of the inter-arrival time, E[T^2] = 2 mu^2 + k E[Y^2] / lambda.
double interarrival_second_moment(const DsppModel& model) {
  const double mu = model.mean_interarrival();
  return 2.0 * mu * mu +
         model.k() * model.off_dist().second_moment() / model.lambda();
}

std::string format_g(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

void TransformGrid::validate() const {
  if (thetas.size() != values.size())
    throw InvalidParameter("values", "length must match thetas");
  if (!stderrs.empty() && stderrs.size() != thetas.size())
    throw InvalidParameter("stderr", "length must match thetas");
  double prev = -1.0;
  for (double t : thetas) {
    if (!(t >= 0.0)) throw InvalidParameter("thetas", "must be >= 0");
    if (t <= prev)
      throw InvalidParameter("thetas", "must be strictly increasing");
    prev = t;
  }
}

double phi_F(const DsppModel& model, double theta) {
  if (theta < 0.0) throw DomainError("phi_F requires theta >= 0");
  const double phi_g = model.off_dist().lst(theta);
  return model.lambda() /
         (model.lambda() + theta + model.k() * (1.0 - phi_g));
}

std::complex<double> phi_F(const DsppModel& model, std::complex<double> s) {
  const std::complex<double> phi_g = model.off_dist().lst(s);
  return model.lambda() /
         (model.lambda() + s + model.k() * (1.0 - phi_g));
}

double mean_interarrival(const DsppModel& model) {
  return model.mean_interarrival();
}

double recover_phi_G(const std::function<double(double)>& phi_f, double lambda,
                     double k, double theta) {
  if (!(lambda > 0.0)) throw InvalidParameter("lambda", "must be > 0");
  if (!(k > 0.0)) throw InvalidParameter("k", "must be > 0");
  if (theta < 0.0) throw DomainError("recover_phi_G requires theta >= 0");
  const double value = phi_f(theta);
  if (value == 0.0)
    throw DivisionByZero("phi_F(theta) = 0 supplied to recover_phi_G");
  return 1.0 + (lambda + theta) / k - lambda / (k * value);
}

double residual_lst(const DsppModel& model, double theta) {
  if (theta < 0.0) throw DomainError("residual_lst requires theta >= 0");
  const double mu = model.mean_interarrival();
  if (theta < kResidualSeriesThreshold) {
    // removable singularity: 1 - theta E[T^2] / (2 mu) + O(theta^2)
    return 1.0 - theta * interarrival_second_moment(model) / (2.0 * mu);
  }
  return (1.0 - phi_F(model, theta)) / (theta * mu);
}

double residual_lst_decomposed(const DsppModel& model, double theta) {
  if (theta < 0.0)
    throw DomainError("residual_lst_decomposed requires theta >= 0");
  const double mean_y = model.mean_off();
  if (mean_y == 0.0)
    throw ZeroMean("decomposition needs E[Y] > 0; use residual_lst directly");
  if (theta < kResidualSeriesThreshold) {
    const double mu = model.mean_interarrival();
    return 1.0 - theta * interarrival_second_moment(model) / (2.0 * mu);
  }
  // conditioning on the level at the origin; -phi_G'(0) = E[Y]
  const double inv_k = 1.0 / model.k();
  const double phi_f = phi_F(model, theta);
  const double phi_g = model.off_dist().lst(theta);
  const double off_term = (1.0 - phi_g) * phi_f / (theta * mean_y) *
                          (mean_y / (inv_k + mean_y));
  const double on_term = phi_f * (inv_k / (inv_k + mean_y));
  return off_term + on_term;
}

LstInversion invert_lst_to_cdf_diagnostic(const DsppModel& model, double t) {
  if (!(t > 0.0)) throw DomainError("invert_lst_to_cdf requires t > 0");
  const auto transform = [&model](std::complex<double> s) {
    return phi_F(model, s) / s;  // the transform of F itself
  };
  LstInversion result{std::numeric_limits<double>::quiet_NaN(),
                      std::numeric_limits<double>::infinity()};
  for (const auto& [lo_order, hi_order] : kInvertLadder) {
    const auto [lo, hi] = dehoog_invert_pair(transform, t, lo_order, hi_order);
    if (!std::isfinite(lo) || !std::isfinite(hi)) continue;
    result.value = hi;
    result.spread = std::abs(hi - lo);
    if (result.spread <= kInvertConsistencyTol) break;
  }
  return result;
}

double invert_lst_to_cdf(const DsppModel& model, double t) {
  const LstInversion inv = invert_lst_to_cdf_diagnostic(model, t);
  if (!std::isfinite(inv.value) || inv.spread > kInvertConsistencyTol) {
    throw ConvergenceFailure(
        "laplace inversion inconsistent at t=" + format_g(t) +
        ": acceleration orders disagree by " + format_g(inv.spread));
  }
  return std::clamp(inv.value, 0.0, 1.0);
}

LstDiagnostics check_valid_lst(const TransformGrid& grid) {
  constexpr double kValueAtZeroTol = 1e-9;
  constexpr double kMonotoneSlack = 1e-12;
  constexpr double kConvexitySlack = 1e-9;
  constexpr double kRangeSlack = 1e-12;

  LstDiagnostics diag;
  const auto& th = grid.thetas;
  const auto& v = grid.values;
  const std::size_t n = std::min(th.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (th[i] == 0.0 && std::abs(v[i] - 1.0) > kValueAtZeroTol)
      diag.violations.push_back(
          {i, "value_at_zero", "value at theta=0 is " + format_g(v[i])});
    if (!(v[i] > 0.0) || v[i] > 1.0 + kRangeSlack)
      diag.violations.push_back(
          {i, "range", "value " + format_g(v[i]) + " outside (0, 1]"});
    if (i > 0 && v[i] > v[i - 1] + kMonotoneSlack)
      diag.violations.push_back(
          {i, "monotonicity", "value rises from " + format_g(v[i - 1]) +
                                  " to " + format_g(v[i])});
    if (i > 1) {
      const double slope_prev = (v[i - 1] - v[i - 2]) / (th[i - 1] - th[i - 2]);
      const double slope_next = (v[i] - v[i - 1]) / (th[i] - th[i - 1]);
      if (slope_next < slope_prev - kConvexitySlack)
        diag.violations.push_back(
            {i, "convexity", "slope falls from " + format_g(slope_prev) +
                                 " to " + format_g(slope_next)});
    }
  }
  return diag;
}

}  // namespace dspp
