#pragma once

#include <functional>
#include <string>
#include <vector>

namespace tailrisk {

// Declared discontinuity of a distortion function: the left limit, the value
// at the point, and the right limit. The engine never assumes one-sided
// continuity, so all three are carried explicitly.
struct DistortionJump {
  double location;
  double left;
  double at;
  double right;
};

// Increasing h: [0,1] -> [0,1] with h(0)=0 and h(1)=1. Known families carry
// exact jump descriptions; evaluation snaps arguments within 1e-12 of a
// declared jump onto it so that cumulative-probability arithmetic cannot
// miss a point value.
class DistortionFunction {
 public:
  // h(x) = 1{x > 1-alpha}, alpha in (0,1]: the VaR_alpha distortion.
  static DistortionFunction var_indicator(double alpha);
  // h(x) = x/(1-alpha) for x <= 1-alpha, else 1: the ES_alpha distortion.
  static DistortionFunction es_ramp(double alpha);
  // h(x) = 1{x > (1-alpha)/2}: the MS_alpha distortion.
  static DistortionFunction ms_indicator(double alpha);
  // h(x) = 1{x >= 1-alpha}: the right-quantile distortion.
  static DistortionFunction right_quantile_indicator(double alpha);
  // h(x) = (1-c) 1{x = 1-alpha} + 1{x > 1-alpha}: c q^- + (1-c) q^+.
  static DistortionFunction quantile_mix(double alpha, double c);
  // h(0)=0, h(1)=1, h = 1-c on (0,1): c VaR_0 + (1-c) VaR_1.
  static DistortionFunction endpoint_step(double c);
  // h(x) = 1 - (1 - x^{1/(1+alpha)})^{1+alpha}, alpha >= 0.
  static DistortionFunction minmaxvar(double alpha);
  // h(x) = x: the mean.
  static DistortionFunction identity();

  static DistortionFunction custom(std::function<double(double)> h,
                                   std::vector<DistortionJump> jumps, std::string name);

  // Point evaluation with jump snapping.
  double operator()(double u) const;

  const std::vector<DistortionJump>& jumps() const { return jumps_; }
  const std::string& name() const { return name_; }

  // Locations in (0,1) where h jumps or kinks; quadrature splits the loss
  // axis where the survival function crosses these.
  const std::vector<double>& feature_points() const { return features_; }

  // h == 0 on [0, zero_below) and h == 1 on (one_above, 1].
  double zero_below() const { return zero_below_; }
  double one_above() const { return one_above_; }

  // Right limit at 0 and left limit at 1 (divergence checks).
  double limit_at_zero() const;
  double limit_at_one() const;

  // Checks h(0)=0, h(1)=1 and monotonicity on a 1e4-point grid plus all
  // declared jumps. Throws std::invalid_argument on violation.
  void validate() const;

 private:
  DistortionFunction(std::function<double(double)> h, std::vector<DistortionJump> jumps,
                     std::vector<double> kinks, double zero_below, double one_above,
                     std::string name);

  std::function<double(double)> h_;
  std::vector<DistortionJump> jumps_;
  std::vector<double> features_;
  double zero_below_ = 0.0;
  double one_above_ = 1.0;
  std::string name_;
};

}  // namespace tailrisk
