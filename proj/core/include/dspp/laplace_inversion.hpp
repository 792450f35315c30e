#pragma once

#include <complex>
#include <functional>
#include <utility>

namespace dspp {

// Numerical inversion of a Laplace transform at time t > 0 by the De Hoog /
// Knight / Stokes quotient-difference algorithm: the Fourier-series
// discretization of the Bromwich integral on the line Re(s) = gamma,
// accelerated by a continued fraction of 2*order terms. Uses 2*order + 1
// transform evaluations.
double dehoog_invert(const std::function<std::complex<double>(std::complex<double>)>& transform,
                     double t, int order);

// Runs two acceleration orders over one shared set of transform evaluations
// and returns {value at order_lo, value at order_hi}; the spread between the
// two is the built-in consistency signal.
std::pair<double, double>
dehoog_invert_pair(const std::function<std::complex<double>(std::complex<double>)>& transform,
                   double t, int order_lo, int order_hi);

}  // namespace dspp
