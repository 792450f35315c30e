#pragma once

#include <complex>
#include <string>
#include <vector>

#include "dspp/random.hpp"

namespace dspp {

enum class OffFamily {
  DegenerateAtZero,
  Deterministic,
  Exponential,
  Gamma,
  Hyperexponential,
  Empirical,
};

// The distribution G of the off-periods (the time the intensity spends at
// level zero). Immutable after construction. Each shipped family has an
// exact mean, second moment and Laplace-Stieltjes transform, so every
// identity built on top of G stays checkable in closed form. The Empirical
// family treats its sample list as an atomic distribution (uniform
// resampling), never a smoothed fit.
class OffTimeDistribution {
 public:
  static OffTimeDistribution degenerate_at_zero();
  static OffTimeDistribution deterministic(double value);
  static OffTimeDistribution exponential(double rate);
  static OffTimeDistribution gamma(double shape, double rate);
  static OffTimeDistribution hyperexponential(std::vector<double> weights,
                                              std::vector<double> rates);
  // Keeps the durations verbatim (sorted ascending). Atoms at zero are
  // allowed; simulation treats a zero off-duration as an instantaneous
  // return to the on level.
  static OffTimeDistribution empirical(std::vector<double> durations);

  OffFamily family() const noexcept { return family_; }
  double mean() const noexcept { return mean_; }
  double second_moment() const noexcept { return second_moment_; }
  // Every shipped family has a finite mean; stationary operations check this
  // and raise InfiniteMean rather than guess if it is ever false.
  bool has_finite_mean() const noexcept { return true; }

  // phi_G(theta) = E[exp(-theta Y)] in closed form, theta >= 0.
  // Throws DomainError for theta < 0.
  double lst(double theta) const;
  // Analytic continuation of phi_G used by the numerical Laplace inverter.
  std::complex<double> lst(std::complex<double> s) const;

  // One draw from G. Draw order: the point-mass families consume nothing;
  // Exponential consumes one uniform; Hyperexponential one uniform (component
  // pick) plus one exponential; Empirical one uniform (index); Gamma a
  // data-dependent number (rejection sampling).
  double sample(RandomStream& rng) const;

  // One draw from the equilibrium (integrated-tail) distribution, density
  // (1 - G(y)) / E[Y]. Exponential is its own equilibrium; Deterministic(d)
  // yields Uniform(0, d); Gamma and Hyperexponential invert the
  // integrated-tail CDF by bisection to 1e-12 on the duration axis;
  // Empirical inverts its piecewise-linear integrated tail exactly.
  // Consumes one uniform. Throws ZeroMean when E[Y] = 0.
  double equilibrium_residual_sample(RandomStream& rng) const;

  // Parameter accessors; each throws DomainError when asked of the wrong
  // family.
  double deterministic_value() const;
  double rate() const;   // Exponential / Gamma
  double shape() const;  // Gamma
  const std::vector<double>& weights() const;
  const std::vector<double>& rates() const;
  const std::vector<double>& samples() const;  // ascending

  // Short human-readable form, e.g. "exponential(rate=2)".
  std::string describe() const;

 private:
  OffTimeDistribution() = default;

  OffFamily family_ = OffFamily::DegenerateAtZero;
  double a_ = 0.0;  // Deterministic value | Exponential rate | Gamma shape
  double b_ = 0.0;  // Gamma rate
  std::vector<double> weights_;
  std::vector<double> rates_;
  std::vector<double> samples_;
  double mean_ = 0.0;
  double second_moment_ = 0.0;
  // Integrated-tail breakpoints for the Empirical equilibrium inverse.
  std::vector<double> eq_breaks_;
  std::vector<double> eq_cum_;
  std::vector<double> eq_slope_;
};

}  // namespace dspp
