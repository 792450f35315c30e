#include "dspp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dspp/errors.hpp"

namespace dspp {

double kolmogorov_sf(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 1.18) {
    // theta-function form, accurate for small x where the direct series
    // converges slowly
    const double w = std::exp(-9.8696044010893586 / (8.0 * x * x));  // pi^2
    const double cdf = 2.5066282746310002 / x *  // sqrt(2 pi)
                       (w + std::pow(w, 9.0) + std::pow(w, 25.0) +
                        std::pow(w, 49.0));
    return 1.0 - cdf;
  }
  const double w = std::exp(-2.0 * x * x);
  double sf = 0.0;
  double sign = 2.0;
  for (int j = 1; j <= 8; ++j) {
    const double term = sign * std::pow(w, static_cast<double>(j) * j);
    sf += term;
    if (std::abs(term) < 1e-300) break;
    sign = -sign;
  }
  return std::max(sf, 0.0);
}

TransformGrid empirical_lst(std::span<const double> samples,
                            std::span<const double> thetas) {
  if (samples.empty()) throw EmptySample("empirical_lst needs samples");
  TransformGrid grid;
  grid.thetas.assign(thetas.begin(), thetas.end());
  grid.values.reserve(thetas.size());
  grid.stderrs.reserve(thetas.size());
  const double n = static_cast<double>(samples.size());
  for (double theta : thetas) {
    if (theta < 0.0) throw DomainError("empirical_lst requires theta >= 0");
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double x : samples) {
      const double v = std::exp(-theta * x);
      sum += v;
      sum_sq += v * v;
    }
    const double mean = sum / n;
    const double var =
        samples.size() > 1
            ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0))
            : 0.0;
    grid.values.push_back(mean);
    grid.stderrs.push_back(std::sqrt(var / n));
  }
  grid.validate();
  return grid;
}

KsResult ks_one_sample(std::span<const double> samples,
                       const std::function<double(double)>& cdf) {
  if (samples.empty()) throw EmptySample("ks_one_sample needs samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const double hi = (static_cast<double>(i) + 1.0) / n - f;
    const double lo = f - static_cast<double>(i) / n;
    d = std::max(d, std::max(hi, lo));
  }
  KsResult result;
  result.statistic = d;
  result.n = sorted.size();
  result.m = 0;
  result.p_value = kolmogorov_sf(std::sqrt(n) * d);
  return result;
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw EmptySample("ks_two_sample needs samples");
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double n = static_cast<double>(sa.size());
  const double m = static_cast<double>(sb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < sa.size() && j < sb.size()) {
    // advance both past ties so the walk is symmetric in (a, b)
    const double v = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] == v) ++i;
    while (j < sb.size() && sb[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n -
                             static_cast<double>(j) / m));
  }
  d = std::max(d, std::abs(static_cast<double>(i) / n -
                           static_cast<double>(j) / m));
  KsResult result;
  result.statistic = d;
  result.n = sa.size();
  result.m = sb.size();
  const double n_eff = n * m / (n + m);
  result.p_value = kolmogorov_sf(std::sqrt(n_eff) * d);
  return result;
}

}  // namespace dspp
