#pragma once

// Internal numeric helpers shared by the library sources. Not installed.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>

namespace tailrisk::detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Adaptive Gauss-Kronrod over [a, b]; either endpoint may be infinite.
// Throws std::domain_error when the result is not finite.
template <typename F>
double integrate(F&& f, double a, double b, const char* what = "integral") {
  if (a == b) return 0.0;
  double err = 0.0;
  double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      std::forward<F>(f), a, b, 15, 1e-10, &err);
  if (!std::isfinite(v)) throw std::domain_error(std::string("divergent ") + what);
  return v;
}

// tanh_sinh for integrands with endpoint singularities (e.g. quantile
// substitutions on (0,1)).
template <typename F>
double integrate_ts(F&& f, double a, double b, const char* what = "integral") {
  if (a == b) return 0.0;
  boost::math::quadrature::tanh_sinh<double> ts;
  double v = ts.integrate(std::forward<F>(f), a, b, 1e-10);
  if (!std::isfinite(v)) throw std::domain_error(std::string("divergent ") + what);
  return v;
}

// Smallest x in [lo, hi] with pred(x) true, assuming pred is monotone
// (false..false true..true). Bisection to absolute tolerance.
inline double bisect_first_true(const std::function<bool(double)>& pred, double lo, double hi,
                                double tol = 1e-12, int max_iter = 200) {
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    double mid = 0.5 * (lo + hi);
    if (pred(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

// 53-bit uniform in (0,1), stable across platforms for a given engine state.
template <typename Engine>
double canonical_uniform(Engine& eng) {
  return (static_cast<double>(eng() >> 11) + 0.5) * 0x1p-53;
}

}  // namespace tailrisk::detail
