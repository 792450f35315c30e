#include "dspp/model.hpp"

#include <cmath>
#include <utility>

#include "dspp/errors.hpp"

namespace dspp {

DsppModel::DsppModel(double lambda, double k, OffTimeDistribution off_dist)
    : lambda_(lambda), k_(k), off_(std::move(off_dist)) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw InvalidParameter("lambda", "must be a finite positive rate");
  if (!(k > 0.0) || !std::isfinite(k))
    throw InvalidParameter("k", "must be a finite positive rate");
}

double DsppModel::mean_interarrival() const {
  if (!off_.has_finite_mean())
    throw InfiniteMean("mean inter-arrival undefined: E[Y] is infinite");
  return (1.0 + k_ * off_.mean()) / lambda_;
}

double DsppModel::p_on() const {
  if (!off_.has_finite_mean())
    throw InfiniteMean("stationary on-probability undefined: E[Y] is infinite");
  return 1.0 / (1.0 + k_ * off_.mean());
}

}  // namespace dspp
