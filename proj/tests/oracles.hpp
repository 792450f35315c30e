// Test-side oracles, kept independent of the library's evaluation paths.
#pragma once

#include <cmath>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

namespace oracles {

// Closed-form phi_G evaluators per family, valid also for (slightly)
// negative theta so central differences at 0 are possible.
inline double phi_g_exponential(double rate, double theta) {
  return rate / (rate + theta);
}
inline double phi_g_deterministic(double d, double theta) {
  return std::exp(-theta * d);
}
inline double phi_g_gamma(double shape, double rate, double theta) {
  return std::pow(rate / (rate + theta), shape);
}
inline double phi_g_hyperexp(std::span<const double> w,
                             std::span<const double> r, double theta) {
  double v = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) v += w[i] * r[i] / (r[i] + theta);
  return v;
}
inline double phi_g_empirical(std::span<const double> ys, double theta) {
  double v = 0.0;
  for (double y : ys) v += std::exp(-theta * y);
  return v / static_cast<double>(ys.size());
}

// phi_F assembled from a phi_G evaluator; no domain restriction.
inline double phi_f_from(const std::function<double(double)>& phi_g,
                         double lambda, double k, double theta) {
  return lambda / (lambda + theta + k * (1.0 - phi_g(theta)));
}

inline double exponential_cdf(double rate, double x) {
  return x <= 0.0 ? 0.0 : 1.0 - std::exp(-rate * x);
}

inline double uniform_cdf(double hi, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= hi) return 1.0;
  return x / hi;
}

// Inter-arrival CDF for lambda=2, k=1, G=Exponential(1):
// phi_F(theta) = 2(1+theta) / (theta^2 + 4 theta + 2), poles at -2 +- sqrt 2,
// partial fractions give F(t) = 1 - exp(-(2-v2)t)/2 - exp(-(2+v2)t)/2.
inline double exp_g_model_cdf(double t) {
  if (t <= 0.0) return 0.0;
  const double s = std::sqrt(2.0);
  return 1.0 - 0.5 * std::exp(-(2.0 - s) * t) - 0.5 * std::exp(-(2.0 + s) * t);
}

// Regularized lower incomplete gamma, test-side copy (series / continued
// fraction) so the oracle below shares nothing with the library.
inline double gamma_p_oracle(double a, double x) {
  if (x <= 0.0) return 0.0;
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a, term = 1.0 / a, sum = term;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - lg);
  }
  double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -1.0 * i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return 1.0 - std::exp(-x + a * std::log(x) - lg) * h;
}

// Inter-arrival CDF for deterministic off-times of length d: conditioning on
// n failure rounds gives an Erlang(n+1, lambda+k) shifted by n*d, so
// F(t) = sum_n q^n p P(n+1, (lambda+k)(t - n d)) with p = lambda/(lambda+k).
inline double det_g_model_cdf(double lambda, double k, double d, double t) {
  if (t <= 0.0) return 0.0;
  const double rate = lambda + k;
  const double p = lambda / rate;
  const double q = k / rate;
  double acc = 0.0;
  double qn = 1.0;
  for (int n = 0; n * d < t; ++n) {
    acc += qn * p * gamma_p_oracle(n + 1.0, rate * (t - n * d));
    qn *= q;
    if (qn < 1e-18) break;
  }
  return acc;
}

inline double mean_of(std::span<const double> xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) /
         static_cast<double>(xs.size());
}

inline double sd_of(std::span<const double> xs) {
  const double m = mean_of(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return std::sqrt(acc / (static_cast<double>(xs.size()) - 1.0));
}

}  // namespace oracles
