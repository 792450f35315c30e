#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "dspp/transforms.hpp"

namespace dspp {

// Outcome of a Kolmogorov-Smirnov test. m is 0 for one-sample tests.
struct KsResult {
  double statistic = 0.0;  // sup-distance, in [0, 1]
  std::size_t n = 0;
  std::size_t m = 0;
  double p_value = 0.0;  // asymptotic Kolmogorov distribution
};

// Survival function of the Kolmogorov distribution,
// Q(x) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 x^2), with the theta-function
// dual used below x ~ 1.18 for accuracy.
double kolmogorov_sf(double x);

// Empirical LST of a sample: values are means of exp(-theta T_i), stderr the
// sample standard deviation over sqrt(n). Throws EmptySample / DomainError.
TransformGrid empirical_lst(std::span<const double> samples,
                            std::span<const double> thetas);

// One-sample KS against a CDF evaluator (monotone into [0, 1]).
// D = max_i max(i/n - F(x_i), F(x_i) - (i-1)/n) over the sorted sample;
// p = Q(sqrt(n) * D), no small-sample correction.
KsResult ks_one_sample(std::span<const double> samples,
                       const std::function<double(double)>& cdf);

// Two-sample KS; p = Q(sqrt(nm/(n+m)) * D). Swapping the samples leaves
// statistic and p-value unchanged bit for bit.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

}  // namespace dspp
