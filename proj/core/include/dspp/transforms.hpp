#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dspp/model.hpp"

namespace dspp {

// Shared evaluation grid for all cross-checks.
inline constexpr std::array<double, 8> kStandardThetaGrid{0.0, 0.1, 0.2, 0.5,
                                                          1.0, 2.0, 5.0, 10.0};

// A theta grid with transform values; stderr entries accompany empirical
// estimates and stay empty for analytic evaluations.
struct TransformGrid {
  std::vector<double> thetas;   // strictly increasing, >= 0
  std::vector<double> values;   // same length
  std::vector<double> stderrs;  // empty, or same length

  // Throws InvalidParameter when the invariants above are broken.
  void validate() const;
};

// Forward transform of the inter-arrival time:
// phi_F(theta) = lambda / (lambda + theta + k (1 - phi_G(theta))).
// Throws DomainError for theta < 0.
double phi_F(const DsppModel& model, double theta);

// Analytic continuation for the numerical inverter.
std::complex<double> phi_F(const DsppModel& model, std::complex<double> s);

// mu = -phi_F'(0) = (1 + k E[Y]) / lambda. Throws InfiniteMean.
double mean_interarrival(const DsppModel& model);

// Algebraic inverse of the forward map:
// phi_G(theta) = 1 + (lambda + theta) / k - lambda / (k phi_F(theta)).
// `phi_f` supplies phi_F values; throws DivisionByZero when it returns 0.
double recover_phi_G(const std::function<double(double)>& phi_f, double lambda,
                     double k, double theta);

// LST of the stationary residual time: (1 - phi_F(theta)) / (theta mu).
// The removable singularity at 0 returns the limit 1; below theta = 1e-8 a
// first-order series in theta is used.
double residual_lst(const DsppModel& model, double theta);

// The same quantity through the two-case stationary decomposition
// (conditioning on the intensity level at the origin). Requires E[Y] > 0;
// throws ZeroMean otherwise.
double residual_lst_decomposed(const DsppModel& model, double theta);

// F(t) recovered from phi_F(theta)/theta by numerical Laplace inversion,
// clamped to [0, 1]. Pairs of acceleration orders are compared, escalating
// up to (72, 96); if the final pair still disagrees beyond 1e-6 a
// ConvergenceFailure naming t is raised. Off-time distributions with atoms
// (Deterministic, Empirical) put derivative kinks into F whose neighborhood
// may exceed the certificate; smooth families stay below 1e-9.
double invert_lst_to_cdf(const DsppModel& model, double t);

// Same inversion ladder, but reports the value of the highest pair that ran
// together with the consistency spread it achieved instead of throwing on
// disagreement. Callers with coarser accuracy needs (e.g. KS evaluation)
// apply their own guard to `spread`.
struct LstInversion {
  double value;
  double spread;
};
LstInversion invert_lst_to_cdf_diagnostic(const DsppModel& model, double t);

// Grid diagnostics for "is this a valid LST": value 1 at theta = 0, values
// in (0, 1], monotone non-increasing, convex (non-decreasing slopes).
struct LstDiagnostics {
  struct Violation {
    std::size_t index;  // grid point where the violation was detected
    std::string kind;   // "value_at_zero" | "range" | "monotonicity" | "convexity"
    std::string detail;
  };
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

// Never throws; reports violations instead.
LstDiagnostics check_valid_lst(const TransformGrid& grid);

}  // namespace dspp
