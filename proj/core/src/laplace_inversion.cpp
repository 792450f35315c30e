#include "dspp/laplace_inversion.hpp"

#include <cmath>
#include <vector>

#include "dspp/errors.hpp"

namespace dspp {

namespace {

using cd = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643;
// Series tolerance fixing the contour abscissa gamma = -log(tol) / (2T).
constexpr double kSeriesTol = 1e-12;
// Period of the Fourier discretization relative to t.
constexpr double kPeriodFactor = 4.0;

// Continued-fraction acceleration of the Fourier series: builds the
// quotient-difference table for a[0..2M] (a[0] already halved) and evaluates
// the (2M+1)-term convergent at z = exp(i pi t / T), including the remainder
// improvement of the last term.
double qd_accelerate(const std::vector<cd>& a, int order, double t, double T,
                     double gamma) {
  const int n2 = 2 * order;
  // q[r] occupies rows 0 .. n2-2r+1, e[r] rows 0 .. n2-2r.
  std::vector<std::vector<cd>> q(order + 1), e(order + 1);
  q[1].resize(n2);
  for (int i = 0; i < n2; ++i) q[1][i] = a[i + 1] / a[i];
  e[0].assign(n2 + 1, cd(0.0));
  e[1].resize(n2 - 1);
  for (int i = 0; i <= n2 - 2; ++i)
    e[1][i] = e[0][i + 1] + q[1][i + 1] - q[1][i];
  for (int r = 2; r <= order; ++r) {
    q[r].resize(n2 - 2 * r + 2);
    for (int i = 0; i <= n2 - 2 * r + 1; ++i)
      q[r][i] = q[r - 1][i + 1] * (e[r - 1][i + 1] / e[r - 1][i]);
    e[r].resize(n2 - 2 * r + 1);
    for (int i = 0; i <= n2 - 2 * r; ++i)
      e[r][i] = e[r - 1][i + 1] + q[r][i + 1] - q[r][i];
  }

  std::vector<cd> d(n2 + 1);
  d[0] = a[0];
  for (int m = 1; m <= order; ++m) {
    d[2 * m - 1] = -q[m][0];
    d[2 * m] = -e[m][0];
  }

  const cd z = std::polar(1.0, kPi * t / T);
  cd a_prev2(0.0), b_prev2(1.0);
  cd a_prev = d[0], b_prev(1.0);
  for (int n = 1; n <= n2; ++n) {
    cd dz = d[n] * z;
    if (n == n2) {
      // remainder of the truncated continued fraction
      const cd h = 0.5 * (1.0 + z * (d[n2 - 1] - d[n2]));
      dz = -h * (1.0 - std::sqrt(1.0 + z * d[n2] / (h * h)));
    }
    const cd a_cur = a_prev + dz * a_prev2;
    const cd b_cur = b_prev + dz * b_prev2;
    a_prev2 = a_prev;
    b_prev2 = b_prev;
    a_prev = a_cur;
    b_prev = b_cur;
  }
  return std::exp(gamma * t) / T * (a_prev / b_prev).real();
}

}  // namespace

std::pair<double, double>
dehoog_invert_pair(const std::function<cd(cd)>& transform, double t,
                   int order_lo, int order_hi) {
  if (!(t > 0.0)) throw DomainError("inversion requires t > 0");
  if (order_lo < 2 || order_hi <= order_lo)
    throw InvalidParameter("order", "need 2 <= order_lo < order_hi");
  const double T = kPeriodFactor * t;
  const double gamma = -std::log(kSeriesTol) / (2.0 * T);
  std::vector<cd> a(2 * order_hi + 1);
  a[0] = 0.5 * transform(cd(gamma, 0.0));
  for (int j = 1; j <= 2 * order_hi; ++j)
    a[j] = transform(cd(gamma, j * kPi / T));
  return {qd_accelerate(a, order_lo, t, T, gamma),
          qd_accelerate(a, order_hi, t, T, gamma)};
}

double dehoog_invert(const std::function<cd(cd)>& transform, double t,
                     int order) {
  if (!(t > 0.0)) throw DomainError("inversion requires t > 0");
  if (order < 2) throw InvalidParameter("order", "must be >= 2");
  const double T = kPeriodFactor * t;
  const double gamma = -std::log(kSeriesTol) / (2.0 * T);
  std::vector<cd> a(2 * order + 1);
  a[0] = 0.5 * transform(cd(gamma, 0.0));
  for (int j = 1; j <= 2 * order; ++j)
    a[j] = transform(cd(gamma, j * kPi / T));
  return qd_accelerate(a, order, t, T, gamma);
}

}  // namespace dspp
