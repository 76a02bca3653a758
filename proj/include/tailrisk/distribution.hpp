#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tailrisk {

namespace detail {
class DistImpl;
}

// Immutable one-dimensional loss distribution. Values are cheap to copy and
// safe to share across threads; sampling takes an explicit seed so parallel
// callers own their generators.
//
// CDFs are right-continuous. Losses are positive-bad by convention.
class Distribution {
 public:
  // Discrete law sum p_i * delta_{x_i}; atoms must be strictly increasing,
  // probs positive and summing to 1 within 1e-12.
  static Distribution discrete(std::vector<double> atoms, std::vector<double> probs);
  static Distribution dirac(double x);

  // Empirical law: equal samples are deduplicated into atoms with summed
  // weights; input order is irrelevant. Weights default to uniform.
  static Distribution empirical(std::vector<double> samples);
  static Distribution empirical(std::vector<double> samples, std::vector<double> weights);

  static Distribution normal(double mu, double sigma);
  static Distribution student_t(double nu, double loc = 0.0, double scale = 1.0);
  static Distribution weibull(double shape, double scale);

  // Mixture of a translated exponential c + Exp(lambda) with weight 1-beta(n)
  // and a point mass at n with weight beta(n) = mu_m / (n - c - 1/lambda).
  // Requires beta(n) in (0,1); otherwise the construction is rejected.
  static Distribution translated_exp_mixture(double c, double lambda, double mu_m, double n);

  // CDF-level mixture sum w_i F_i. All-discrete mixtures are flattened into a
  // single discrete law.
  static Distribution mixture(std::vector<Distribution> parts, std::vector<double> weights);

  // alpha-tail distribution: CDF is 0 below VaR_alpha(base) and
  // (F(x)-alpha)/(1-alpha), clamped to [0,1], at and above it.
  Distribution tail(double alpha) const;

  double cdf(double x) const;

  // Left quantile inf{x | F(x) >= a}; a=0 gives the essential infimum.
  // Throws "infinite quantile" when the answer is not finite.
  double quantile_left(double a) const;
  // Right quantile inf{x | F(x) > a}, a in [0,1).
  double quantile_right(double a) const;

  double mean() const;      // throws domain_error when undefined/infinite
  double variance() const;  // throws domain_error when undefined/infinite

  double support_lo() const;  // essential infimum, may be -inf
  double support_hi() const;  // essential supremum, may be +inf

  // True when the upper (lower) tail has a finite partial first moment.
  bool tail_mean_finite(bool upper) const;

  bool is_discrete() const;
  const std::vector<double>& atoms() const;  // discrete laws only
  const std::vector<double>& probs() const;

  // Inverse-CDF sampling, deterministic given the seed.
  std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

  std::string describe() const;

 private:
  explicit Distribution(std::shared_ptr<const detail::DistImpl> impl);
  std::shared_ptr<const detail::DistImpl> impl_;
};

}  // namespace tailrisk
