#include "tailrisk/distribution.hpp"

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "detail_numerics.hpp"

namespace tailrisk {
namespace detail {

class DistImpl {
 public:
  virtual ~DistImpl() = default;

  virtual double cdf(double x) const = 0;
  virtual double quantile_left(double a) const;
  virtual double quantile_right(double a) const;
  virtual double mean() const = 0;
  virtual double variance() const = 0;
  virtual double support_lo() const = 0;
  virtual double support_hi() const = 0;
  virtual bool tail_mean_finite(bool /*upper*/) const { return true; }
  virtual bool is_discrete() const { return false; }
  virtual std::string describe() const = 0;

  // Inverse-CDF draw for a uniform u in (0,1); overridden where a closed
  // form beats the generic quantile.
  virtual double inverse_draw(double u) const { return quantile_left(u); }
};

namespace {

[[noreturn]] void throw_infinite_quantile(double a) {
  std::ostringstream os;
  os << "infinite quantile at level " << a;
  throw std::domain_error(os.str());
}

void check_prob_level(double a, double lo, double hi, const char* op) {
  if (!(a >= lo && a <= hi) || !std::isfinite(a)) {
    std::ostringstream os;
    os << op << ": level " << a << " outside [" << lo << ", " << hi << "]";
    throw std::invalid_argument(os.str());
  }
}

// Expanding bracket followed by bisection on F(x) >= a (or > a for the right
// quantile). Absolute tolerance 1e-12.
double generic_quantile(const DistImpl& d, double a, bool right) {
  const double lo_s = d.support_lo();
  const double hi_s = d.support_hi();
  auto hit = [&](double x) { return right ? d.cdf(x) > a : d.cdf(x) >= a; };

  double lo = std::isfinite(lo_s) ? lo_s : (std::isfinite(hi_s) ? hi_s - 1.0 : -1.0);
  double hi = std::isfinite(hi_s) ? hi_s : (std::isfinite(lo_s) ? lo_s + 1.0 : 1.0);
  if (!std::isfinite(lo_s)) {
    double step = 1.0;
    for (int i = 0; i < 300 && hit(lo); ++i, step *= 2.0) lo -= step;
  }
  if (!std::isfinite(hi_s)) {
    double step = 1.0;
    for (int i = 0; i < 300 && !hit(hi); ++i, step *= 2.0) hi += step;
  }
  if (hit(lo)) return lo;
  if (!hit(hi)) throw_infinite_quantile(a);
  return bisect_first_true(hit, lo, hi);
}

}  // namespace

double DistImpl::quantile_left(double a) const {
  check_prob_level(a, 0.0, 1.0, "quantile_left");
  if (a == 0.0) {
    double lo = support_lo();
    if (!std::isfinite(lo)) throw_infinite_quantile(a);
    return lo;
  }
  if (a == 1.0) {
    double hi = support_hi();
    if (!std::isfinite(hi)) throw_infinite_quantile(a);
    return hi;
  }
  return generic_quantile(*this, a, /*right=*/false);
}

double DistImpl::quantile_right(double a) const {
  check_prob_level(a, 0.0, 1.0, "quantile_right");
  if (a >= 1.0) throw std::invalid_argument("quantile_right: level must be < 1");
  double v = generic_quantile(*this, a, /*right=*/true);
  if (!std::isfinite(v)) throw_infinite_quantile(a);
  return v;
}

namespace {

// ---------------------------------------------------------------------------
// Discrete

class DiscreteImpl final : public DistImpl {
 public:
  DiscreteImpl(std::vector<double> atoms, std::vector<double> probs)
      : atoms_(std::move(atoms)), probs_(std::move(probs)) {
    if (atoms_.empty() || atoms_.size() != probs_.size())
      throw std::invalid_argument("discrete law needs matching nonempty atoms/probs");
    double sum = 0.0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (!std::isfinite(atoms_[i])) throw std::invalid_argument("discrete atom not finite");
      if (i > 0 && !(atoms_[i] > atoms_[i - 1]))
        throw std::invalid_argument("discrete atoms must be strictly increasing");
      if (!(probs_[i] > 0.0)) throw std::invalid_argument("discrete probs must be positive");
      sum += probs_[i];
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("discrete probs must sum to 1 within 1e-12");
    for (double& p : probs_) p /= sum;
    cum_.resize(probs_.size());
    std::partial_sum(probs_.begin(), probs_.end(), cum_.begin());
    cum_.back() = 1.0;
  }

  double cdf(double x) const override {
    auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x);
    if (it == atoms_.begin()) return 0.0;
    return cum_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
  }

  double quantile_left(double a) const override {
    check_prob_level(a, 0.0, 1.0, "quantile_left");
    if (a == 0.0) return atoms_.front();
    auto it = std::lower_bound(cum_.begin(), cum_.end(), a);
    return atoms_[std::min<std::size_t>(static_cast<std::size_t>(it - cum_.begin()),
                                        atoms_.size() - 1)];
  }

  double quantile_right(double a) const override {
    check_prob_level(a, 0.0, 1.0, "quantile_right");
    if (a >= 1.0) throw std::invalid_argument("quantile_right: level must be < 1");
    auto it = std::upper_bound(cum_.begin(), cum_.end(), a);
    return atoms_[std::min<std::size_t>(static_cast<std::size_t>(it - cum_.begin()),
                                        atoms_.size() - 1)];
  }

  double mean() const override {
    double m = 0.0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) m += probs_[i] * atoms_[i];
    return m;
  }

  double variance() const override {
    double m = mean(), v = 0.0;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      v += probs_[i] * (atoms_[i] - m) * (atoms_[i] - m);
    return v;
  }

  double support_lo() const override { return atoms_.front(); }
  double support_hi() const override { return atoms_.back(); }
  bool is_discrete() const override { return true; }

  double inverse_draw(double u) const override {
    auto it = std::lower_bound(cum_.begin(), cum_.end(), u);
    return atoms_[std::min<std::size_t>(static_cast<std::size_t>(it - cum_.begin()),
                                        atoms_.size() - 1)];
  }

  std::string describe() const override {
    std::ostringstream os;
    os << "discrete(" << atoms_.size() << " atoms)";
    return os.str();
  }

  const std::vector<double>& atoms() const { return atoms_; }
  const std::vector<double>& probs() const { return probs_; }
  const std::vector<double>& cum() const { return cum_; }

 private:
  std::vector<double> atoms_, probs_, cum_;
};

// ---------------------------------------------------------------------------
// Parametric families

class NormalImpl final : public DistImpl {
 public:
  NormalImpl(double mu, double sigma) : mu_(mu), sigma_(sigma), law_(mu, sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("normal: sigma must be > 0");
  }
  double cdf(double x) const override { return boost::math::cdf(law_, x); }
  double quantile_left(double a) const override {
    check_prob_level(a, 0.0, 1.0, "quantile_left");
    if (a == 0.0 || a == 1.0) throw_infinite_quantile(a);
    return boost::math::quantile(law_, a);
  }
  double quantile_right(double a) const override {
    check_prob_level(a, 0.0, 1.0, "quantile_right");
    if (a == 0.0 || a >= 1.0) throw_infinite_quantile(a);
    return boost::math::quantile(law_, a);
  }
  double mean() const override { return mu_; }
  double variance() const override { return sigma_ * sigma_; }
  double support_lo() const override { return -kInf; }
  double support_hi() const override { return kInf; }
  std::string describe() const override {
    std::ostringstream os;
    os << "normal(mu=" << mu_ << ", sigma=" << sigma_ << ")";
    return os.str();
  }

 private:
  double mu_, sigma_;
  boost::math::normal_distribution<double> law_;
};

class StudentTImpl final : public DistImpl {
 public:
  StudentTImpl(double nu, double loc, double scale) : nu_(nu), loc_(loc), scale_(scale), law_(nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("student_t: nu must be > 0");
    if (!(scale > 0.0)) throw std::invalid_argument("student_t: scale must be > 0");
  }
  double cdf(double x) const override { return boost::math::cdf(law_, (x - loc_) / scale_); }
  double quantile_left(double a) const override {
    check_prob_level(a, 0.0, 1.0, "quantile_left");
    if (a == 0.0 || a == 1.0) throw_infinite_quantile(a);
    return loc_ + scale_ * boost::math::quantile(law_, a);
  }
  double quantile_right(double a) const override {
    check_prob_level(a, 0.0, 1.0, "quantile_right");
    if (a == 0.0 || a >= 1.0) throw_infinite_quantile(a);
    return loc_ + scale_ * boost::math::quantile(law_, a);
  }
  double mean() const override {
    if (!(nu_ > 1.0)) throw std::domain_error("student_t: mean undefined for nu <= 1");
    return loc_;
  }
  double variance() const override {
    if (!(nu_ > 2.0)) throw std::domain_error("student_t: variance undefined for nu <= 2");
    return scale_ * scale_ * nu_ / (nu_ - 2.0);
  }
  double support_lo() const override { return -kInf; }
  double support_hi() const override { return kInf; }
  bool tail_mean_finite(bool) const override { return nu_ > 1.0; }
  std::string describe() const override {
    std::ostringstream os;
    os << "student_t(nu=" << nu_ << ", loc=" << loc_ << ", scale=" << scale_ << ")";
    return os.str();
  }

 private:
  double nu_, loc_, scale_;
  boost::math::students_t_distribution<double> law_;
};

class WeibullImpl final : public DistImpl {
 public:
  WeibullImpl(double shape, double scale) : k_(shape), lam_(scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
      throw std::invalid_argument("weibull: shape and scale must be > 0");
  }
  double cdf(double x) const override {
    if (x <= 0.0) return 0.0;
    return -std::expm1(-std::pow(x / lam_, k_));
  }
  double quantile_left(double a) const override {
    check_prob_level(a, 0.0, 1.0, "quantile_left");
    if (a == 0.0) return 0.0;
    if (a == 1.0) throw_infinite_quantile(a);
    return lam_ * std::pow(-std::log1p(-a), 1.0 / k_);
  }
  double quantile_right(double a) const override {
    check_prob_level(a, 0.0, 1.0, "quantile_right");
    if (a >= 1.0) throw_infinite_quantile(a);
    return quantile_left(a == 0.0 ? std::numeric_limits<double>::min() : a);
  }
  double mean() const override { return lam_ * std::tgamma(1.0 + 1.0 / k_); }
  double variance() const override {
    double g1 = std::tgamma(1.0 + 1.0 / k_), g2 = std::tgamma(1.0 + 2.0 / k_);
    return lam_ * lam_ * (g2 - g1 * g1);
  }
  double support_lo() const override { return 0.0; }
  double support_hi() const override { return kInf; }
  std::string describe() const override {
    std::ostringstream os;
    os << "weibull(shape=" << k_ << ", scale=" << lam_ << ")";
    return os.str();
  }

 private:
  double k_, lam_;
};

// Mixture of c + Exp(lambda) with weight 1-beta and delta_n with weight beta.
class TExpMixImpl final : public DistImpl {
 public:
  TExpMixImpl(double c, double lambda, double mu_m, double n)
      : c_(c), lam_(lambda), mu_(mu_m), n_(n) {
    if (!(lambda > 0.0)) throw std::invalid_argument("translated_exp_mixture: lambda must be > 0");
    if (!(mu_m > 0.0)) throw std::invalid_argument("translated_exp_mixture: mu_m must be > 0");
    double denom = n - c - 1.0 / lambda;
    beta_ = mu_m / denom;
    if (!(denom > 0.0) || !(beta_ > 0.0) || !(beta_ < 1.0))
      throw std::invalid_argument(
          "translated_exp_mixture: beta(n) = mu_m/(n - c - 1/lambda) must lie in (0,1)");
  }

  double cdf(double x) const override {
    if (x < c_) return 0.0;
    double f = (1.0 - beta_) * -std::expm1(-lam_ * (x - c_));
    if (x >= n_) f += beta_;
    return std::min(f, 1.0);
  }

  double quantile_left(double a) const override {
    check_prob_level(a, 0.0, 1.0, "quantile_left");
    if (a == 0.0) return c_;
    if (a == 1.0) throw_infinite_quantile(a);
    double f_below_n = (1.0 - beta_) * -std::expm1(-lam_ * (n_ - c_));
    if (a <= f_below_n) return c_ - std::log1p(-a / (1.0 - beta_)) / lam_;
    if (a <= f_below_n + beta_) return n_;
    return c_ - std::log((1.0 - a) / (1.0 - beta_)) / lam_;
  }

  double quantile_right(double a) const override {
    check_prob_level(a, 0.0, 1.0, "quantile_right");
    if (a >= 1.0) throw_infinite_quantile(a);
    double f_below_n = (1.0 - beta_) * -std::expm1(-lam_ * (n_ - c_));
    if (a < f_below_n) return c_ - std::log1p(-a / (1.0 - beta_)) / lam_;
    if (a < f_below_n + beta_) return n_;
    return c_ - std::log((1.0 - a) / (1.0 - beta_)) / lam_;
  }

  // (1-beta)(c + 1/lambda) + beta n = c + mu_m + 1/lambda by construction.
  double mean() const override { return c_ + mu_ + 1.0 / lam_; }

  double variance() const override {
    double m2_exp = c_ * c_ + 2.0 * c_ / lam_ + 2.0 / (lam_ * lam_);
    double m2 = (1.0 - beta_) * m2_exp + beta_ * n_ * n_;
    double m = mean();
    return m2 - m * m;
  }

  double support_lo() const override { return c_; }
  double support_hi() const override { return kInf; }
  double beta() const { return beta_; }

  double inverse_draw(double u) const override { return quantile_left(u); }

  std::string describe() const override {
    std::ostringstream os;
    os << "translated_exp_mixture(c=" << c_ << ", lambda=" << lam_ << ", mu_m=" << mu_
       << ", n=" << n_ << ", beta=" << beta_ << ")";
    return os.str();
  }

 private:
  double c_, lam_, mu_, n_, beta_;
};

// ---------------------------------------------------------------------------
// Generic mixture (kept only when some component is non-discrete)

class MixtureImpl final : public DistImpl {
 public:
  MixtureImpl(std::vector<std::shared_ptr<const DistImpl>> parts, std::vector<double> weights)
      : parts_(std::move(parts)), w_(std::move(weights)) {}

  double cdf(double x) const override {
    double f = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) f += w_[i] * parts_[i]->cdf(x);
    return f;
  }

  double mean() const override {
    double m = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) m += w_[i] * parts_[i]->mean();
    return m;
  }

  double variance() const override {
    double m = mean(), v = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      double mi = parts_[i]->mean();
      v += w_[i] * (parts_[i]->variance() + mi * mi);
    }
    return v - m * m;
  }

  double support_lo() const override {
    double lo = kInf;
    for (const auto& p : parts_) lo = std::min(lo, p->support_lo());
    return lo;
  }
  double support_hi() const override {
    double hi = -kInf;
    for (const auto& p : parts_) hi = std::max(hi, p->support_hi());
    return hi;
  }
  bool tail_mean_finite(bool upper) const override {
    for (const auto& p : parts_)
      if (!p->tail_mean_finite(upper)) return false;
    return true;
  }

  std::string describe() const override {
    std::ostringstream os;
    os << "mixture(" << parts_.size() << " parts)";
    return os.str();
  }

 private:
  std::vector<std::shared_ptr<const DistImpl>> parts_;
  std::vector<double> w_;
};

// ---------------------------------------------------------------------------
// alpha-tail distribution of a generic base law

class TailImpl final : public DistImpl {
 public:
  TailImpl(std::shared_ptr<const DistImpl> base, double alpha)
      : base_(std::move(base)), alpha_(alpha), var_(base_->quantile_left(alpha)) {}

  double cdf(double x) const override {
    if (x < var_) return 0.0;
    double f = (base_->cdf(x) - alpha_) / (1.0 - alpha_);
    return std::clamp(f, 0.0, 1.0);
  }

  double quantile_left(double a) const override {
    check_prob_level(a, 0.0, 1.0, "quantile_left");
    if (a == 0.0) return var_;
    double u = alpha_ + a * (1.0 - alpha_);
    return std::max(var_, base_->quantile_left(std::min(u, 1.0)));
  }

  double quantile_right(double a) const override {
    check_prob_level(a, 0.0, 1.0, "quantile_right");
    if (a >= 1.0) throw std::invalid_argument("quantile_right: level must be < 1");
    double u = alpha_ + a * (1.0 - alpha_);
    return std::max(var_, base_->quantile_right(u));
  }

  double mean() const override {
    if (!base_->tail_mean_finite(true)) throw std::domain_error("non-integrable tail");
    // E[T] = v + (1/(1-alpha)) * int_v^inf P(X > x) dx
    double excess =
        integrate([this](double x) { return 1.0 - base_->cdf(x); }, var_,
                  std::isfinite(base_->support_hi()) ? base_->support_hi() : kInf, "tail mean");
    return var_ + excess / (1.0 - alpha_);
  }

  double variance() const override {
    double m = mean();
    // E[T^2] = v^2 + int_v^inf 2 x P_T(X > x) dx
    double hi = std::isfinite(base_->support_hi()) ? base_->support_hi() : kInf;
    double m2 = var_ * var_ + integrate(
                                  [this](double x) {
                                    double st = 1.0 - cdf(x);
                                    return 2.0 * x * st;
                                  },
                                  var_, hi, "tail second moment");
    return m2 - m * m;
  }

  double support_lo() const override { return var_; }
  double support_hi() const override { return base_->support_hi(); }
  bool tail_mean_finite(bool upper) const override {
    return upper ? base_->tail_mean_finite(true) : true;
  }

  std::string describe() const override {
    std::ostringstream os;
    os << "tail(alpha=" << alpha_ << " of " << base_->describe() << ")";
    return os.str();
  }

 private:
  std::shared_ptr<const DistImpl> base_;
  double alpha_;
  double var_;
};

const DiscreteImpl* as_discrete(const DistImpl& d) { return dynamic_cast<const DiscreteImpl*>(&d); }

}  // namespace
}  // namespace detail

// ---------------------------------------------------------------------------
// Public surface

using detail::DistImpl;

Distribution::Distribution(std::shared_ptr<const DistImpl> impl) : impl_(std::move(impl)) {}

Distribution Distribution::discrete(std::vector<double> atoms, std::vector<double> probs) {
  return Distribution(std::make_shared<detail::DiscreteImpl>(std::move(atoms), std::move(probs)));
}

Distribution Distribution::dirac(double x) { return discrete({x}, {1.0}); }

Distribution Distribution::empirical(std::vector<double> samples) {
  return empirical(std::move(samples), {});
}

Distribution Distribution::empirical(std::vector<double> samples, std::vector<double> weights) {
  if (samples.empty()) throw std::invalid_argument("empirical law needs at least one sample");
  bool uniform = weights.empty();
  if (!uniform && weights.size() != samples.size())
    throw std::invalid_argument("empirical: weights length mismatch");
  std::map<double, double> acc;
  double total = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double w = uniform ? 1.0 : weights[i];
    if (!(w > 0.0)) throw std::invalid_argument("empirical: weights must be positive");
    acc[samples[i]] += w;
    total += w;
  }
  std::vector<double> atoms, probs;
  atoms.reserve(acc.size());
  probs.reserve(acc.size());
  for (const auto& [x, w] : acc) {
    atoms.push_back(x);
    probs.push_back(w / total);
  }
  return discrete(std::move(atoms), std::move(probs));
}

Distribution Distribution::normal(double mu, double sigma) {
  return Distribution(std::make_shared<detail::NormalImpl>(mu, sigma));
}

Distribution Distribution::student_t(double nu, double loc, double scale) {
  return Distribution(std::make_shared<detail::StudentTImpl>(nu, loc, scale));
}

Distribution Distribution::weibull(double shape, double scale) {
  return Distribution(std::make_shared<detail::WeibullImpl>(shape, scale));
}

Distribution Distribution::translated_exp_mixture(double c, double lambda, double mu_m, double n) {
  return Distribution(std::make_shared<detail::TExpMixImpl>(c, lambda, mu_m, n));
}

Distribution Distribution::mixture(std::vector<Distribution> parts, std::vector<double> weights) {
  if (parts.empty() || parts.size() != weights.size())
    throw std::invalid_argument("mixture: parts/weights length mismatch");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw std::invalid_argument("mixture: weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("mixture: weights must sum to 1 within 1e-12");
  for (double& w : weights) w /= sum;

  bool all_discrete = std::all_of(parts.begin(), parts.end(),
                                  [](const Distribution& d) { return d.is_discrete(); });
  if (all_discrete) {
    std::map<double, double> acc;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& a = parts[i].atoms();
      const auto& p = parts[i].probs();
      for (std::size_t j = 0; j < a.size(); ++j) acc[a[j]] += weights[i] * p[j];
    }
    std::vector<double> atoms, probs;
    for (const auto& [x, w] : acc) {
      atoms.push_back(x);
      probs.push_back(w);
    }
    return discrete(std::move(atoms), std::move(probs));
  }

  std::vector<std::shared_ptr<const DistImpl>> impls;
  impls.reserve(parts.size());
  for (const auto& p : parts) impls.push_back(p.impl_);
  return Distribution(std::make_shared<detail::MixtureImpl>(std::move(impls), std::move(weights)));
}

Distribution Distribution::tail(double alpha) const {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::invalid_argument("tail: alpha must lie in [0, 1)");
  if (const auto* d = detail::as_discrete(*impl_)) {
    // The tail of a discrete law is discrete: atom at VaR keeps mass
    // (F(v)-alpha)/(1-alpha); later atoms are rescaled by 1/(1-alpha).
    double v = d->quantile_left(alpha);
    std::vector<double> atoms, probs;
    const auto& a = d->atoms();
    const auto& p = d->probs();
    const auto& c = d->cum();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] < v) continue;
      double mass = (a[i] == v) ? (c[i] - alpha) / (1.0 - alpha) : p[i] / (1.0 - alpha);
      if (mass > 1e-15) {
        atoms.push_back(a[i]);
        probs.push_back(mass);
      }
    }
    return discrete(std::move(atoms), std::move(probs));
  }
  return Distribution(std::make_shared<detail::TailImpl>(impl_, alpha));
}

double Distribution::cdf(double x) const { return impl_->cdf(x); }
double Distribution::quantile_left(double a) const { return impl_->quantile_left(a); }
double Distribution::quantile_right(double a) const { return impl_->quantile_right(a); }
double Distribution::mean() const { return impl_->mean(); }
double Distribution::variance() const { return impl_->variance(); }
double Distribution::support_lo() const { return impl_->support_lo(); }
double Distribution::support_hi() const { return impl_->support_hi(); }
bool Distribution::tail_mean_finite(bool upper) const { return impl_->tail_mean_finite(upper); }
bool Distribution::is_discrete() const { return impl_->is_discrete(); }

const std::vector<double>& Distribution::atoms() const {
  const auto* d = detail::as_discrete(*impl_);
  if (!d) throw std::logic_error("atoms(): not a discrete law");
  return d->atoms();
}

const std::vector<double>& Distribution::probs() const {
  const auto* d = detail::as_discrete(*impl_);
  if (!d) throw std::logic_error("probs(): not a discrete law");
  return d->probs();
}

std::vector<double> Distribution::sample(std::size_t n, std::uint64_t seed) const {
  if (n == 0) throw std::invalid_argument("sample: n must be >= 1");
  std::mt19937_64 eng(seed);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = impl_->inverse_draw(detail::canonical_uniform(eng));
  return out;
}

std::string Distribution::describe() const { return impl_->describe(); }

}  // namespace tailrisk
