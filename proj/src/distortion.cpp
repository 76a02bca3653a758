#include "tailrisk/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tailrisk {

namespace {
constexpr double kSnap = 1e-12;
}

DistortionFunction::DistortionFunction(std::function<double(double)> h,
                                       std::vector<DistortionJump> jumps,
                                       std::vector<double> kinks, double zero_below,
                                       double one_above, std::string name)
    : h_(std::move(h)),
      jumps_(std::move(jumps)),
      zero_below_(zero_below),
      one_above_(one_above),
      name_(std::move(name)) {
  for (const auto& j : jumps_)
    if (j.location > 0.0 && j.location < 1.0) features_.push_back(j.location);
  features_.insert(features_.end(), kinks.begin(), kinks.end());
  std::sort(features_.begin(), features_.end());
  features_.erase(std::unique(features_.begin(), features_.end()), features_.end());
}

double DistortionFunction::operator()(double u) const {
  if (u < -kSnap || u > 1.0 + kSnap)
    throw std::invalid_argument("distortion argument outside [0,1]");
  u = std::clamp(u, 0.0, 1.0);
  for (const auto& j : jumps_) {
    if (std::abs(u - j.location) <= kSnap) return j.at;
  }
  return h_(u);
}

double DistortionFunction::limit_at_zero() const {
  for (const auto& j : jumps_)
    if (j.location == 0.0) return j.right;
  return h_(1e-13);
}

double DistortionFunction::limit_at_one() const {
  for (const auto& j : jumps_)
    if (j.location == 1.0) return j.left;
  return h_(1.0 - 1e-13);
}

void DistortionFunction::validate() const {
  if (std::abs((*this)(0.0)) > 1e-12 || std::abs((*this)(1.0) - 1.0) > 1e-12)
    throw std::invalid_argument("distortion must satisfy h(0)=0 and h(1)=1");
  for (const auto& j : jumps_) {
    if (!(j.left <= j.at + 1e-15 && j.at <= j.right + 1e-15))
      throw std::invalid_argument("distortion jump values violate monotonicity");
  }
  const int n = 10000;
  double prev = 0.0;
  for (int i = 1; i <= n; ++i) {
    double u = static_cast<double>(i) / n;
    double v = (*this)(u);
    if (v < prev - 1e-12) throw std::invalid_argument("distortion not nondecreasing");
    prev = std::max(prev, v);
  }
  // grid plus declared jumps: left/right limits must bracket the point value
  for (const auto& j : jumps_) {
    if (j.location > 0.0 && j.location < 1.0) {
      double eps = 1e-9;
      if (h_(std::max(0.0, j.location - eps)) > j.left + 1e-6 ||
          h_(std::min(1.0, j.location + eps)) < j.right - 1e-6)
        throw std::invalid_argument("declared jump inconsistent with evaluation rule");
    }
  }
}

DistortionFunction DistortionFunction::var_indicator(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("var_indicator: alpha must lie in (0,1]");
  double loc = 1.0 - alpha;
  std::ostringstream nm;
  nm << "var@" << alpha;
  return DistortionFunction([loc](double u) { return u > loc ? 1.0 : 0.0; },
                            {{loc, 0.0, 0.0, 1.0}}, {}, /*zero_below=*/loc,
                            /*one_above=*/loc, nm.str());
}

DistortionFunction DistortionFunction::es_ramp(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::invalid_argument("es_ramp: alpha must lie in [0,1)");
  double k = 1.0 - alpha;
  std::ostringstream nm;
  nm << "es@" << alpha;
  return DistortionFunction([k](double u) { return u <= k ? u / k : 1.0; }, {}, {k},
                            /*zero_below=*/0.0, /*one_above=*/k, nm.str());
}

DistortionFunction DistortionFunction::ms_indicator(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::invalid_argument("ms_indicator: alpha must lie in [0,1)");
  double loc = (1.0 - alpha) / 2.0;
  std::ostringstream nm;
  nm << "ms@" << alpha;
  return DistortionFunction([loc](double u) { return u > loc ? 1.0 : 0.0; },
                            {{loc, 0.0, 0.0, 1.0}}, {}, loc, loc, nm.str());
}

DistortionFunction DistortionFunction::right_quantile_indicator(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("right_quantile_indicator: alpha must lie in (0,1)");
  double loc = 1.0 - alpha;
  std::ostringstream nm;
  nm << "rq@" << alpha;
  return DistortionFunction([loc](double u) { return u >= loc ? 1.0 : 0.0; },
                            {{loc, 0.0, 1.0, 1.0}}, {}, loc, loc, nm.str());
}

DistortionFunction DistortionFunction::quantile_mix(double alpha, double c) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("quantile_mix: alpha must lie in (0,1)");
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("quantile_mix: c must lie in [0,1]");
  double loc = 1.0 - alpha;
  std::ostringstream nm;
  nm << "qmix@" << alpha << ":c=" << c;
  return DistortionFunction(
      [loc, c](double u) { return u > loc ? 1.0 : (u == loc ? 1.0 - c : 0.0); },
      {{loc, 0.0, 1.0 - c, 1.0}}, {}, loc, loc, nm.str());
}

DistortionFunction DistortionFunction::endpoint_step(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("endpoint_step: c must lie in [0,1]");
  double v = 1.0 - c;
  return DistortionFunction(
      [v](double u) {
        if (u <= 0.0) return 0.0;
        if (u >= 1.0) return 1.0;
        return v;
      },
      {{0.0, 0.0, 0.0, v}, {1.0, v, 1.0, 1.0}}, {}, 0.0, 1.0, "endpoint_step");
}

DistortionFunction DistortionFunction::minmaxvar(double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("minmaxvar: alpha must be >= 0");
  double p = 1.0 + alpha;
  std::ostringstream nm;
  nm << "minmaxvar:alpha=" << alpha;
  return DistortionFunction(
      [p](double u) { return 1.0 - std::pow(1.0 - std::pow(u, 1.0 / p), p); }, {}, {}, 0.0, 1.0,
      nm.str());
}

DistortionFunction DistortionFunction::identity() {
  return DistortionFunction([](double u) { return u; }, {}, {}, 0.0, 1.0, "identity");
}

DistortionFunction DistortionFunction::custom(std::function<double(double)> h,
                                              std::vector<DistortionJump> jumps,
                                              std::string name) {
  // Conservative truncation bounds; the quadrature only exploits declared
  // structure on named families.
  DistortionFunction d(std::move(h), std::move(jumps), {}, 0.0, 1.0, std::move(name));
  d.validate();
  return d;
}

}  // namespace tailrisk
