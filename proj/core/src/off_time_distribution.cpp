#include "dspp/off_time_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "dspp/errors.hpp"

namespace dspp {

namespace {

constexpr double kWeightSumTolerance = 1e-12;
constexpr double kBisectTolerance = 1e-12;  // absolute, on the duration axis

// Regularized lower incomplete gamma P(a, x); series for x < a + 1,
// continued fraction otherwise.
double gamma_p(double a, double x) {
  if (x <= 0.0) return 0.0;
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - lg);
  }
  // Lentz continued fraction for Q(a, x).
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 - std::exp(-x + a * std::log(x) - lg) * h;
}

// Marsaglia-Tsang gamma variate with unit rate.
double sample_standard_gamma(double shape, RandomStream& rng) {
  if (shape < 1.0) {
    const double boost = std::pow(rng.next_double(), 1.0 / shape);
    return sample_standard_gamma(shape + 1.0, rng) * boost;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_double();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

// Solves cdf(y) = u for a monotone cdf with cdf(0) = 0, bisecting to
// kBisectTolerance. The bracket doubles from `hint` until it covers u.
template <typename Cdf>
double invert_monotone_cdf(const Cdf& cdf, double u, double hint) {
  double lo = 0.0;
  double hi = std::max(hint, 1.0);
  for (int i = 0; i < 200 && cdf(hi) < u; ++i) hi *= 2.0;
  while (hi - lo > kBisectTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval below double resolution
    if (cdf(mid) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::string format_param(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

OffTimeDistribution OffTimeDistribution::degenerate_at_zero() {
  OffTimeDistribution d;
  d.family_ = OffFamily::DegenerateAtZero;
  d.mean_ = 0.0;
  d.second_moment_ = 0.0;
  return d;
}

OffTimeDistribution OffTimeDistribution::deterministic(double value) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw InvalidParameter("d", "must be a finite positive duration");
  OffTimeDistribution d;
  d.family_ = OffFamily::Deterministic;
  d.a_ = value;
  d.mean_ = value;
  d.second_moment_ = value * value;
  return d;
}

OffTimeDistribution OffTimeDistribution::exponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw InvalidParameter("rate", "must be a finite positive rate");
  OffTimeDistribution d;
  d.family_ = OffFamily::Exponential;
  d.a_ = rate;
  d.mean_ = 1.0 / rate;
  d.second_moment_ = 2.0 / (rate * rate);
  return d;
}

OffTimeDistribution OffTimeDistribution::gamma(double shape, double rate) {
  if (!(shape > 0.0) || !std::isfinite(shape))
    throw InvalidParameter("shape", "must be a finite positive shape");
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw InvalidParameter("rate", "must be a finite positive rate");
  OffTimeDistribution d;
  d.family_ = OffFamily::Gamma;
  d.a_ = shape;
  d.b_ = rate;
  d.mean_ = shape / rate;
  d.second_moment_ = shape * (shape + 1.0) / (rate * rate);
  return d;
}

OffTimeDistribution OffTimeDistribution::hyperexponential(
    std::vector<double> weights, std::vector<double> rates) {
  if (weights.empty()) throw InvalidParameter("weights", "must be non-empty");
  if (weights.size() != rates.size())
    throw InvalidParameter("rates", "must match weights in length");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw InvalidParameter("weights", "entries must be finite and >= 0");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance)
    throw InvalidParameter("weights",
                           "must sum to 1 (got " + format_param(sum) + ")");
  for (double r : rates) {
    if (!(r > 0.0) || !std::isfinite(r))
      throw InvalidParameter("rates", "entries must be finite and > 0");
  }
  OffTimeDistribution d;
  d.family_ = OffFamily::Hyperexponential;
  d.weights_ = std::move(weights);
  d.rates_ = std::move(rates);
  for (std::size_t i = 0; i < d.weights_.size(); ++i) {
    d.mean_ += d.weights_[i] / d.rates_[i];
    d.second_moment_ += d.weights_[i] * 2.0 / (d.rates_[i] * d.rates_[i]);
  }
  return d;
}

OffTimeDistribution OffTimeDistribution::empirical(std::vector<double> durations) {
  if (durations.empty()) throw InvalidParameter("samples", "must be non-empty");
  for (double y : durations) {
    if (!(y >= 0.0) || !std::isfinite(y))
      throw InvalidParameter("samples", "entries must be finite and >= 0");
  }
  std::sort(durations.begin(), durations.end());
  OffTimeDistribution d;
  d.family_ = OffFamily::Empirical;
  d.samples_ = std::move(durations);
  const double n = static_cast<double>(d.samples_.size());
  for (double y : d.samples_) {
    d.mean_ += y / n;
    d.second_moment_ += y * y / n;
  }
  // Integrated-tail table: breakpoints at the distinct sample values, with
  // the cumulative integral of the survival function at each breakpoint.
  if (d.mean_ > 0.0) {
    d.eq_breaks_.push_back(0.0);
    d.eq_cum_.push_back(0.0);
    std::size_t seen = 0;
    while (seen < d.samples_.size()) {
      const double v = d.samples_[seen];
      // survival on [previous breakpoint, v)
      const double survival = 1.0 - static_cast<double>(seen) / n;
      if (v > d.eq_breaks_.back()) {
        d.eq_slope_.push_back(survival);
        d.eq_cum_.push_back(d.eq_cum_.back() +
                            survival * (v - d.eq_breaks_.back()));
        d.eq_breaks_.push_back(v);
      }
      while (seen < d.samples_.size() && d.samples_[seen] == v) ++seen;
    }
  }
  return d;
}

double OffTimeDistribution::lst(double theta) const {
  if (theta < 0.0) throw DomainError("lst requires theta >= 0");
  switch (family_) {
    case OffFamily::DegenerateAtZero:
      return 1.0;
    case OffFamily::Deterministic:
      return std::exp(-theta * a_);
    case OffFamily::Exponential:
      return a_ / (a_ + theta);
    case OffFamily::Gamma:
      return std::pow(b_ / (b_ + theta), a_);
    case OffFamily::Hyperexponential: {
      double v = 0.0;
      for (std::size_t i = 0; i < weights_.size(); ++i)
        v += weights_[i] * rates_[i] / (rates_[i] + theta);
      return v;
    }
    case OffFamily::Empirical: {
      double v = 0.0;
      for (double y : samples_) v += std::exp(-theta * y);
      return v / static_cast<double>(samples_.size());
    }
  }
  throw DomainError("unreachable family");
}

std::complex<double> OffTimeDistribution::lst(std::complex<double> s) const {
  using cd = std::complex<double>;
  switch (family_) {
    case OffFamily::DegenerateAtZero:
      return cd(1.0, 0.0);
    case OffFamily::Deterministic:
      return std::exp(-s * a_);
    case OffFamily::Exponential:
      return a_ / (a_ + s);
    case OffFamily::Gamma:
      return std::exp(-a_ * std::log(1.0 + s / b_));
    case OffFamily::Hyperexponential: {
      cd v(0.0, 0.0);
      for (std::size_t i = 0; i < weights_.size(); ++i)
        v += weights_[i] * rates_[i] / (rates_[i] + s);
      return v;
    }
    case OffFamily::Empirical: {
      cd v(0.0, 0.0);
      for (double y : samples_) v += std::exp(-s * y);
      return v / static_cast<double>(samples_.size());
    }
  }
  throw DomainError("unreachable family");
}

double OffTimeDistribution::sample(RandomStream& rng) const {
  switch (family_) {
    case OffFamily::DegenerateAtZero:
      return 0.0;
    case OffFamily::Deterministic:
      return a_;
    case OffFamily::Exponential:
      return rng.exponential(a_);
    case OffFamily::Gamma:
      return sample_standard_gamma(a_, rng) / b_;
    case OffFamily::Hyperexponential: {
      const double u = rng.next_double();
      double acc = 0.0;
      std::size_t pick = weights_.size() - 1;
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        acc += weights_[i];
        if (u < acc) {
          pick = i;
          break;
        }
      }
      return rng.exponential(rates_[pick]);
    }
    case OffFamily::Empirical:
      return samples_[rng.uniform_index(samples_.size())];
  }
  throw DomainError("unreachable family");
}

double OffTimeDistribution::equilibrium_residual_sample(RandomStream& rng) const {
  if (mean_ == 0.0)
    throw ZeroMean("equilibrium residual undefined: off-time mean is 0");
  switch (family_) {
    case OffFamily::Exponential:
      return rng.exponential(a_);  // memoryless: residual == original
    case OffFamily::Deterministic:
      return a_ * rng.next_double();
    case OffFamily::Gamma: {
      const double u = rng.next_double();
      const auto cdf = [this](double y) {
        // integral of (1 - G) over [0, y], by parts, divided by the mean
        const double tail = y * (1.0 - gamma_p(a_, b_ * y));
        const double partial = mean_ * gamma_p(a_ + 1.0, b_ * y);
        return (tail + partial) / mean_;
      };
      return invert_monotone_cdf(cdf, u, mean_);
    }
    case OffFamily::Hyperexponential: {
      const double u = rng.next_double();
      const auto cdf = [this](double y) {
        double acc = 0.0;
        for (std::size_t i = 0; i < weights_.size(); ++i)
          acc += weights_[i] / rates_[i] * (1.0 - std::exp(-rates_[i] * y));
        return acc / mean_;
      };
      return invert_monotone_cdf(cdf, u, mean_);
    }
    case OffFamily::Empirical: {
      // Exact inverse of the piecewise-linear integrated tail.
      const double target = rng.next_double() * mean_;
      const auto it =
          std::upper_bound(eq_cum_.begin(), eq_cum_.end(), target);
      const std::size_t seg =
          static_cast<std::size_t>(std::distance(eq_cum_.begin(), it)) - 1;
      if (seg + 1 >= eq_cum_.size()) return eq_breaks_.back();
      return eq_breaks_[seg] + (target - eq_cum_[seg]) / eq_slope_[seg];
    }
    case OffFamily::DegenerateAtZero:
      break;  // mean_ == 0, handled above
  }
  throw ZeroMean("equilibrium residual undefined");
}

double OffTimeDistribution::deterministic_value() const {
  if (family_ != OffFamily::Deterministic)
    throw DomainError("not a deterministic distribution");
  return a_;
}

double OffTimeDistribution::rate() const {
  if (family_ == OffFamily::Exponential) return a_;
  if (family_ == OffFamily::Gamma) return b_;
  throw DomainError("family has no scalar rate");
}

double OffTimeDistribution::shape() const {
  if (family_ != OffFamily::Gamma) throw DomainError("family has no shape");
  return a_;
}

const std::vector<double>& OffTimeDistribution::weights() const {
  if (family_ != OffFamily::Hyperexponential)
    throw DomainError("family has no weights");
  return weights_;
}

const std::vector<double>& OffTimeDistribution::rates() const {
  if (family_ != OffFamily::Hyperexponential)
    throw DomainError("family has no rate vector");
  return rates_;
}

const std::vector<double>& OffTimeDistribution::samples() const {
  if (family_ != OffFamily::Empirical)
    throw DomainError("family has no sample list");
  return samples_;
}

std::string OffTimeDistribution::describe() const {
  switch (family_) {
    case OffFamily::DegenerateAtZero:
      return "degenerate_at_zero";
    case OffFamily::Deterministic:
      return "deterministic(d=" + format_param(a_) + ")";
    case OffFamily::Exponential:
      return "exponential(rate=" + format_param(a_) + ")";
    case OffFamily::Gamma:
      return "gamma(shape=" + format_param(a_) + ",rate=" + format_param(b_) + ")";
    case OffFamily::Hyperexponential: {
      std::string w, r;
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) w += ",", r += ",";
        w += format_param(weights_[i]);
        r += format_param(rates_[i]);
      }
      return "hyperexponential(weights=[" + w + "],rates=[" + r + "])";
    }
    case OffFamily::Empirical:
      return "empirical(n=" + std::to_string(samples_.size()) + ")";
  }
  return "?";
}

}  // namespace dspp
