#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tailrisk/distortion.hpp"
#include "tailrisk/distribution.hpp"

namespace tailrisk {

// Choquet integral s * int X d(h o P), computed as
//   s * int_0^inf h(P(X>x)) dx + s * int_{-inf}^0 (h(P(X>x)) - 1) dx.
// Discrete laws use the closed form
//   g(p_1) x_1 + sum_{i>=2} (g(P_i) - g(P_{i-1})) x_i,   g(u) = 1 - h(1-u);
// everything else goes through adaptive quadrature with the loss axis split
// where the survival function crosses a declared jump or kink of h.
// Throws std::domain_error("non-integrable under h") on divergence.
double choquet(const Distribution& d, const DistortionFunction& h, double scale = 1.0);

double var(const Distribution& d, double alpha);   // left quantile
double es(const Distribution& d, double alpha);    // mean of the alpha-tail law
double ms(const Distribution& d, double alpha);    // = var(d, (1+alpha)/2)
double mean(const Distribution& d);

// c q_alpha^- + (1-c) q_alpha^+
double quantile_mix(const Distribution& d, double alpha, double c);

// c VaR_0 + (1-c) VaR_1; requires bounded support.
double endpoint_mix(const Distribution& d, double c);

// Generalized spectral measure sum_u delta({u}) q^-(u); the spectrum is a
// discrete probability law with atoms in (0,1].
double gen_spectral(const Distribution& d, const Distribution& spectrum);

// Discretizes an increasing nonnegative density phi on (0,1) onto a
// midpoint grid (default 2^14 cells) and normalizes; the approximation
// error of the induced measure is O(1/grid).
Distribution spectral_grid(const std::function<double(double)>& phi, std::size_t grid = 1 << 14);

// Parsed risk-measure specification. Text forms:
//   mean | var@A | es@A | ms@A | qmix@A:c=C | emix:c=C | minmaxvar:alpha=A
// with an optional ,s=S scale suffix on the parameter list (or :s=S where no
// parameter list exists), e.g. es@0.975, qmix@0.95:c=0.5,s=2, mean:s=3.
class RiskMeasureSpec {
 public:
  enum class Kind { VaR, ES, MS, Mean, QuantileMix, EndpointMix, MinMaxVar, GenSpectral };

  static RiskMeasureSpec var(double alpha, double scale = 1.0);
  static RiskMeasureSpec es(double alpha, double scale = 1.0);
  static RiskMeasureSpec ms(double alpha, double scale = 1.0);
  static RiskMeasureSpec mean(double scale = 1.0);
  static RiskMeasureSpec quantile_mix(double alpha, double c, double scale = 1.0);
  static RiskMeasureSpec endpoint_mix(double c, double scale = 1.0);
  static RiskMeasureSpec minmaxvar(double alpha, double scale = 1.0);
  static RiskMeasureSpec gen_spectral(Distribution spectrum, double scale = 1.0);

  static RiskMeasureSpec parse(const std::string& text);
  std::string to_string() const;

  double evaluate(const Distribution& d) const;

  // The distortion realizing this measure through the Choquet engine
  // (all variants except GenSpectral with non-singleton spectrum).
  std::optional<DistortionFunction> distortion() const;

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double c() const { return c_; }
  double scale() const { return scale_; }

 private:
  Kind kind_ = Kind::Mean;
  double alpha_ = 0.0;
  double c_ = 0.0;
  double scale_ = 1.0;
  std::optional<Distribution> spectrum_;
};

}  // namespace tailrisk
