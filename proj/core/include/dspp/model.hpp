#pragma once

#include "dspp/off_time_distribution.hpp"

namespace dspp {

// The on-off model (lambda, k, G): the intensity holds level lambda for
// Exponential(k) stretches and level zero for G-distributed stretches.
// lambda and k must be strictly positive.
class DsppModel {
 public:
  DsppModel(double lambda, double k, OffTimeDistribution off_dist);

  double lambda() const noexcept { return lambda_; }
  double k() const noexcept { return k_; }
  const OffTimeDistribution& off_dist() const noexcept { return off_; }

  double mean_off() const noexcept { return off_.mean(); }

  // mu = (1 + k E[Y]) / lambda. Recomputed on every call, never cached.
  // Throws InfiniteMean when G has no finite mean.
  double mean_interarrival() const;

  // Stationary probability of sitting at level lambda: 1 / (1 + k E[Y]).
  // Satisfies p_on * lambda * mu = 1.
  double p_on() const;

 private:
  double lambda_;
  double k_;
  OffTimeDistribution off_;
};

}  // namespace dspp
