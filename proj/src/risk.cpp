#include "tailrisk/risk.hpp"

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "detail_numerics.hpp"

namespace tailrisk {

namespace {

using detail::kInf;

double choquet_discrete(const Distribution& d, const DistortionFunction& h) {
  const auto& atoms = d.atoms();
  const auto& probs = d.probs();
  // g(u) = 1 - h(1-u); rho = sum_i (g(P_i) - g(P_{i-1})) x_i with P_0 = 0.
  double rho = 0.0;
  double cum = 0.0;
  double g_prev = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    cum += probs[i];
    if (i + 1 == atoms.size()) cum = 1.0;
    double g = 1.0 - h(1.0 - cum);
    rho += (g - g_prev) * atoms[i];
    g_prev = g;
  }
  return rho;
}

double choquet_quadrature(const Distribution& d, const DistortionFunction& h) {
  const double lo = d.support_lo();
  const double hi = d.support_hi();

  // Divergence checks for the unbounded ends.
  if (hi == kInf) {
    if (h.limit_at_zero() > 1e-12) throw std::domain_error("non-integrable under h");
    if (h.one_above() == 0.0) throw std::domain_error("non-integrable under h");
    if (h.zero_below() == 0.0 && !d.tail_mean_finite(true))
      throw std::domain_error("non-integrable under h");
  }
  if (lo == -kInf) {
    if (h.limit_at_one() < 1.0 - 1e-12) throw std::domain_error("non-integrable under h");
    if (h.one_above() == 1.0 && !d.tail_mean_finite(false))
      throw std::domain_error("non-integrable under h");
  }

  // h == 1 for x < A and h == 0 for x > B.
  double A = (h.one_above() < 1.0) ? d.quantile_left(1.0 - h.one_above()) : lo;
  double B = (h.zero_below() > 0.0) ? d.quantile_right(1.0 - h.zero_below()) : hi;
  A = std::max(A, lo);
  B = std::min(B, hi);
  if (A > B) A = B;

  double total = std::max(A, 0.0) + std::min(B, 0.0);

  std::vector<double> knots;
  knots.push_back(A);
  for (double u0 : h.feature_points()) {
    double p = 1.0 - u0;
    if (p <= 0.0 || p >= 1.0) continue;
    for (double x : {d.quantile_left(p), d.quantile_right(p)})
      if (x > A && x < B) knots.push_back(x);
  }
  if (0.0 > A && 0.0 < B) knots.push_back(0.0);
  knots.push_back(B);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  auto f = [&](double x) {
    double s = 1.0 - d.cdf(x);
    double v = h(s);
    return x >= 0.0 ? v : v - 1.0;
  };
  for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    total += detail::integrate(f, knots[i], knots[i + 1], "Choquet integral");
  if (!std::isfinite(total)) throw std::domain_error("non-integrable under h");
  return total;
}

}  // namespace

double choquet(const Distribution& d, const DistortionFunction& h, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("choquet: scale must be > 0");
  double rho = d.is_discrete() ? choquet_discrete(d, h) : choquet_quadrature(d, h);
  return scale * rho;
}

double var(const Distribution& d, double alpha) { return d.quantile_left(alpha); }

double es(const Distribution& d, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("es: alpha must lie in [0,1]");
  if (alpha == 1.0) return d.quantile_left(1.0);
  if (!d.tail_mean_finite(true)) throw std::domain_error("non-integrable tail");
  if (auto v = d.closed_form_tail_mean(alpha)) return *v;
  if (alpha == 0.0) return d.mean();
  return d.tail(alpha).mean();
}

double ms(const Distribution& d, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("ms: alpha must lie in [0,1]");
  if (alpha == 1.0) return d.quantile_left(1.0);
  return d.quantile_left((1.0 + alpha) / 2.0);
}

double mean(const Distribution& d) { return d.mean(); }

double quantile_mix(const Distribution& d, double alpha, double c) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("quantile_mix: alpha must lie in (0,1)");
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("quantile_mix: c must lie in [0,1]");
  return c * d.quantile_left(alpha) + (1.0 - c) * d.quantile_right(alpha);
}

double endpoint_mix(const Distribution& d, double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("endpoint_mix: c must lie in [0,1]");
  double lo = d.support_lo(), hi = d.support_hi();
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw std::domain_error("infinite endpoint");
  return c * lo + (1.0 - c) * hi;
}

double gen_spectral(const Distribution& d, const Distribution& spectrum) {
  if (!spectrum.is_discrete())
    throw std::invalid_argument("gen_spectral: spectrum must be a discrete law on (0,1]");
  const auto& u = spectrum.atoms();
  const auto& w = spectrum.probs();
  double rho = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(u[i] > 0.0 && u[i] <= 1.0))
      throw std::invalid_argument("gen_spectral: spectrum atoms must lie in (0,1]");
    rho += w[i] * d.quantile_left(u[i]);
  }
  return rho;
}

Distribution spectral_grid(const std::function<double(double)>& phi, std::size_t grid) {
  if (grid < 1) throw std::invalid_argument("spectral_grid: grid must be >= 1");
  std::vector<double> atoms(grid), w(grid);
  double total = 0.0;
  for (std::size_t j = 0; j < grid; ++j) {
    atoms[j] = (static_cast<double>(j) + 0.5) / static_cast<double>(grid);
    w[j] = phi(atoms[j]);
    if (!(w[j] >= 0.0)) throw std::invalid_argument("spectral_grid: phi must be nonnegative");
    total += w[j];
  }
  if (!(total > 0.0)) throw std::invalid_argument("spectral_grid: phi integrates to zero");
  for (double& x : w) x /= total;
  // drop zero-weight cells
  std::vector<double> a2, w2;
  for (std::size_t j = 0; j < grid; ++j)
    if (w[j] > 0.0) {
      a2.push_back(atoms[j]);
      w2.push_back(w[j]);
    }
  return Distribution::discrete(std::move(a2), std::move(w2));
}

// ---------------------------------------------------------------------------
// RiskMeasureSpec

RiskMeasureSpec RiskMeasureSpec::var(double alpha, double scale) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("var: alpha must lie in [0,1]");
  RiskMeasureSpec s;
  s.kind_ = Kind::VaR;
  s.alpha_ = alpha;
  s.scale_ = scale;
  return s;
}

RiskMeasureSpec RiskMeasureSpec::es(double alpha, double scale) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("es: alpha must lie in [0,1]");
  RiskMeasureSpec s;
  s.kind_ = Kind::ES;
  s.alpha_ = alpha;
  s.scale_ = scale;
  return s;
}

RiskMeasureSpec RiskMeasureSpec::ms(double alpha, double scale) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("ms: alpha must lie in [0,1]");
  RiskMeasureSpec s;
  s.kind_ = Kind::MS;
  s.alpha_ = alpha;
  s.scale_ = scale;
  return s;
}

RiskMeasureSpec RiskMeasureSpec::mean(double scale) {
  RiskMeasureSpec s;
  s.kind_ = Kind::Mean;
  s.scale_ = scale;
  return s;
}

RiskMeasureSpec RiskMeasureSpec::quantile_mix(double alpha, double c, double scale) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("quantile_mix: alpha must lie in (0,1)");
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("quantile_mix: c must lie in [0,1]");
  RiskMeasureSpec s;
  s.kind_ = Kind::QuantileMix;
  s.alpha_ = alpha;
  s.c_ = c;
  s.scale_ = scale;
  return s;
}

RiskMeasureSpec RiskMeasureSpec::endpoint_mix(double c, double scale) {
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("endpoint_mix: c must lie in [0,1]");
  RiskMeasureSpec s;
  s.kind_ = Kind::EndpointMix;
  s.c_ = c;
  s.scale_ = scale;
  return s;
}

RiskMeasureSpec RiskMeasureSpec::minmaxvar(double alpha, double scale) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("minmaxvar: alpha must be >= 0");
  RiskMeasureSpec s;
  s.kind_ = Kind::MinMaxVar;
  s.alpha_ = alpha;
  s.scale_ = scale;
  return s;
}

RiskMeasureSpec RiskMeasureSpec::gen_spectral(Distribution spectrum, double scale) {
  RiskMeasureSpec s;
  s.kind_ = Kind::GenSpectral;
  s.spectrum_ = std::move(spectrum);
  s.scale_ = scale;
  return s;
}

double RiskMeasureSpec::evaluate(const Distribution& d) const {
  if (!(scale_ > 0.0)) throw std::invalid_argument("risk measure scale must be > 0");
  switch (kind_) {
    case Kind::VaR:
      return scale_ * tailrisk::var(d, alpha_);
    case Kind::ES:
      return scale_ * tailrisk::es(d, alpha_);
    case Kind::MS:
      return scale_ * tailrisk::ms(d, alpha_);
    case Kind::Mean:
      return scale_ * tailrisk::mean(d);
    case Kind::QuantileMix:
      return scale_ * tailrisk::quantile_mix(d, alpha_, c_);
    case Kind::EndpointMix:
      return scale_ * tailrisk::endpoint_mix(d, c_);
    case Kind::MinMaxVar:
      return choquet(d, DistortionFunction::minmaxvar(alpha_), scale_);
    case Kind::GenSpectral:
      return scale_ * tailrisk::gen_spectral(d, *spectrum_);
  }
  throw std::logic_error("unreachable");
}

std::optional<DistortionFunction> RiskMeasureSpec::distortion() const {
  switch (kind_) {
    case Kind::VaR:
      if (alpha_ == 0.0) return DistortionFunction::endpoint_step(1.0);
      return DistortionFunction::var_indicator(alpha_);
    case Kind::ES:
      if (alpha_ == 1.0) return DistortionFunction::var_indicator(1.0);
      return DistortionFunction::es_ramp(alpha_);
    case Kind::MS:
      if (alpha_ == 1.0) return DistortionFunction::var_indicator(1.0);
      return DistortionFunction::ms_indicator(alpha_);
    case Kind::Mean:
      return DistortionFunction::identity();
    case Kind::QuantileMix:
      return DistortionFunction::quantile_mix(alpha_, c_);
    case Kind::EndpointMix:
      return DistortionFunction::endpoint_step(c_);
    case Kind::MinMaxVar:
      return DistortionFunction::minmaxvar(alpha_);
    case Kind::GenSpectral:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("risk spec: bad number '" + s + "' for " + what);
  }
}

std::string format_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

RiskMeasureSpec RiskMeasureSpec::parse(const std::string& text) {
  // name[@alpha][:key=value,...]
  std::string name = text, alpha_str, kv_str;
  if (auto colon = name.find(':'); colon != std::string::npos) {
    kv_str = name.substr(colon + 1);
    name = name.substr(0, colon);
  }
  if (auto at = name.find('@'); at != std::string::npos) {
    alpha_str = name.substr(at + 1);
    name = name.substr(0, at);
  }
  double scale = 1.0, c = -1.0, alpha_kv = -1.0;
  std::string rest = kv_str;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string pair = rest.substr(0, comma);
    rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
    auto eq = pair.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("risk spec: expected key=value, got '" + pair + "'");
    std::string key = pair.substr(0, eq), val = pair.substr(eq + 1);
    if (key == "s")
      scale = parse_double(val, "s");
    else if (key == "c")
      c = parse_double(val, "c");
    else if (key == "alpha")
      alpha_kv = parse_double(val, "alpha");
    else
      throw std::invalid_argument("risk spec: unknown key '" + key + "'");
  }

  auto need_alpha = [&]() {
    if (alpha_str.empty()) throw std::invalid_argument("risk spec: '" + name + "' needs @alpha");
    return parse_double(alpha_str, "alpha");
  };
  if (name == "var") return var(need_alpha(), scale);
  if (name == "es") return es(need_alpha(), scale);
  if (name == "ms") return ms(need_alpha(), scale);
  if (name == "mean") return mean(scale);
  if (name == "qmix") {
    if (c < 0.0) throw std::invalid_argument("risk spec: qmix needs c=");
    return quantile_mix(need_alpha(), c, scale);
  }
  if (name == "emix") {
    if (c < 0.0) throw std::invalid_argument("risk spec: emix needs c=");
    return endpoint_mix(c, scale);
  }
  if (name == "minmaxvar") {
    if (alpha_kv < 0.0) throw std::invalid_argument("risk spec: minmaxvar needs alpha=");
    return minmaxvar(alpha_kv, scale);
  }
  throw std::invalid_argument("risk spec: unknown measure '" + name + "'");
}

std::string RiskMeasureSpec::to_string() const {
  std::ostringstream os;
  bool have_kv = false;
  switch (kind_) {
    case Kind::VaR:
      os << "var@" << format_double(alpha_);
      break;
    case Kind::ES:
      os << "es@" << format_double(alpha_);
      break;
    case Kind::MS:
      os << "ms@" << format_double(alpha_);
      break;
    case Kind::Mean:
      os << "mean";
      break;
    case Kind::QuantileMix:
      os << "qmix@" << format_double(alpha_) << ":c=" << format_double(c_);
      have_kv = true;
      break;
    case Kind::EndpointMix:
      os << "emix:c=" << format_double(c_);
      have_kv = true;
      break;
    case Kind::MinMaxVar:
      os << "minmaxvar:alpha=" << format_double(alpha_);
      have_kv = true;
      break;
    case Kind::GenSpectral:
      os << "genspectral(" << (spectrum_ ? spectrum_->atoms().size() : 0) << " atoms)";
      break;
  }
  if (scale_ != 1.0) os << (have_kv ? "," : ":") << "s=" << format_double(scale_);
  return os.str();
}

}  // namespace tailrisk
