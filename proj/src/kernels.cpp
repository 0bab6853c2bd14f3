#include "fracsmooth/kernels.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "util.hpp"

namespace fracsmooth {

namespace {

using GK15 = boost::math::quadrature::gauss_kronrod<double, 15>;
constexpr double two_pi = 2.0 * std::numbers::pi;

// Upper bound for int_R^inf e^{-t xi^alpha} d xi.  Substituting v = xi^alpha
// and majorizing v^{1/alpha - 1} by A^{beta - k} v^k (k integer >= beta)
// leaves an incomplete-Gamma integral with an elementary closed form.
double radial_tail_bound(double alpha, double t, double r) {
  double a_low = std::pow(r, alpha);
  double beta = 1.0 / alpha - 1.0;
  int k = std::max(0, static_cast<int>(std::ceil(beta)));
  // int_A^inf v^k e^{-tv} dv = e^{-tA} k! / t^{k+1} * sum_{m<=k} (tA)^m / m!
  double series = 0.0, term = 1.0; // term = (tA)^m / m!
  for (int m = 0; m <= k; ++m) {
    series += term;
    term *= t * a_low / (m + 1);
  }
  double kfact = 1.0;
  for (int m = 2; m <= k; ++m) kfact *= m;
  double gamma_part = std::exp(-t * a_low) * kfact * std::pow(t, -(k + 1)) * series;
  return (1.0 / alpha) * std::pow(a_low, beta - k) * gamma_part;
}

} // namespace

double kernel_eval(double alpha, double t, double x, const QuadControl &quad) {
  if (!(alpha > 0.0 && alpha <= 2.0))
    throw std::invalid_argument("kernel_eval: alpha must lie in (0, 2]");
  if (!(t > 0.0)) throw std::invalid_argument("kernel_eval: t must be positive");

  auto integrand = [&](double xi) {
    return std::cos(two_pi * x * xi) * std::exp(-t * std::pow(xi, alpha));
  };

  double acc = 0.0, err = 0.0;
  double lo = 0.0, len = 1.0;
  for (int panel = 0; panel < 64; ++panel) {
    double panel_err = 0.0;
    acc += GK15::integrate(integrand, lo, lo + len, quad.max_depth, 1e-12, &panel_err);
    err += panel_err;
    lo += len;
    len *= 2.0;
    double tail = radial_tail_bound(alpha, t, lo);
    double target = std::max(quad.abs_tol, quad.rel_tol * std::abs(acc));
    if (tail <= 0.5 * target) {
      err += tail;
      if (err > target)
        throw QuadratureError("kernel_eval: requested tolerance not met", 2.0 * err,
                              2.0 * target);
      return 2.0 * acc;
    }
  }
  throw QuadratureError("kernel_eval: tail did not close within panel budget",
                        2.0 * (err + radial_tail_bound(alpha, t, lo)), 2.0 * quad.abs_tol);
}

double gaussian_kernel_1d(double t, double x) {
  const double pi = std::numbers::pi;
  return std::sqrt(pi / t) * std::exp(-pi * pi * x * x / t);
}

double poisson_kernel_1d(double t, double x) {
  const double a = two_pi * x;
  return 2.0 * t / (t * t + a * a);
}

double kernel_at_origin_1d(double alpha, double t) {
  return (2.0 / alpha) * std::pow(t, -1.0 / alpha) * std::tgamma(1.0 / alpha);
}

namespace {

// Band-limited kernel slice at fixed (alpha, t, j): a composite
// Gauss-Legendre rule over the band support, dense enough to resolve the
// cos(2 pi x xi) oscillation for all |x| up to x_cap.
class BandKernelRule {
public:
  BandKernelRule(double alpha, double t, int j, const BumpProfile &profile, double u_cap)
      : lo_(std::ldexp(1.0, j - 1)), hi_(std::ldexp(1.0, j + 1)) {
    // <= ~6 oscillation periods per panel at the largest admissible |x|
    int panels = std::max<int>(12, static_cast<int>(std::ceil(1.5 * u_cap / 6.0)) + 4);
    build(alpha, t, j, profile, panels);
    // guard the fixed rule against under-resolution: double the panel count
    // until the value at the worst-case oscillation stabilizes
    double x_worst = u_cap * std::ldexp(1.0, -j);
    for (int round = 0; round < 3; ++round) {
      BandKernelRule finer(*this);
      finer.build(alpha, t, j, profile, 2 * panels);
      double scale = std::abs(finer.value(0.0)) + 1e-300;
      double dev = std::max(std::abs(value(0.0) - finer.value(0.0)),
                            std::abs(value(x_worst) - finer.value(x_worst)));
      rule_error_ = dev;
      if (dev <= 1e-11 * scale) break;
      nodes_ = std::move(finer.nodes_);
      weights_ = std::move(finer.weights_);
      panels *= 2;
    }
  }

  // P_j(t, x) without the 2^{j alpha / p} prefactor
  double value(double x) const {
    detail::KahanSum acc;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      acc.add(weights_[i] * std::cos(two_pi * x * nodes_[i]));
    return 2.0 * acc.value();
  }

  double rule_error() const { return rule_error_; }

private:
  void build(double alpha, double t, int j, const BumpProfile &profile, int panels) {
    using G32 = boost::math::quadrature::gauss<double, 32>;
    const auto &xs = G32::abscissa(); // nonnegative half nodes on [-1, 1]
    const auto &ws = G32::weights();
    nodes_.clear();
    weights_.clear();
    double width = (hi_ - lo_) / panels;
    double scale = std::ldexp(1.0, -j);
    for (int panel = 0; panel < panels; ++panel) {
      double mid = lo_ + (panel + 0.5) * width;
      double half = 0.5 * width;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (int sign : {-1, 1}) {
          if (sign == 1 && xs[i] == 0.0) continue;
          double xi = mid + sign * half * xs[i];
          nodes_.push_back(xi);
          weights_.push_back(half * ws[i] * profile.psi(scale * xi) *
                             std::exp(-t * std::pow(xi, alpha)));
        }
      }
    }
  }

  double lo_, hi_;
  std::vector<double> nodes_, weights_;
  double rule_error_ = 0.0;
};

struct BandL1Result {
  double value = 0.0;   // without the 2^{j alpha/p} prefactor
  double error = 0.0;
};

// int_R |P_j(t, x)| dx by panel integration on the dilation scale 2^{-j},
// stopped once the measured panel decay certifies a negligible tail.
BandL1Result band_l1_unweighted(double alpha, double t, int j, const BumpProfile &profile,
                                const QuadControl &quad) {
  double u_cap = 96.0;
  for (int attempt = 0; attempt < 5; ++attempt, u_cap *= 2.0) {
    BandKernelRule rule(alpha, t, j, profile, u_cap);
    double scale0 = std::abs(rule.value(0.0));
    if (scale0 == 0.0) return {0.0, 0.0};

    const double du = 0.25; // panel width in scaled units u = 2^j x
    const double dx = du * std::ldexp(1.0, -j);
    detail::KahanSum acc;
    double err = rule.rule_error();
    int quiet = 0;
    double last_panel = 0.0, last_u = 0.0;
    bool closed = false;
    for (int m = 0; m * du < u_cap; ++m) {
      double a = m * dx, b = (m + 1) * dx;
      double panel_err = 0.0;
      double val = GK15::integrate([&](double x) { return std::abs(rule.value(x)); }, a, b,
                                   quad.max_depth, 1e-9, &panel_err);
      acc.add(val);
      err += panel_err;
      last_panel = val;
      last_u = (m + 1) * du;
      if (last_u >= 24.0 && val <= 5e-10 * acc.value())
        ++quiet;
      else
        quiet = 0;
      if (quiet >= 2) {
        closed = true;
        break;
      }
    }
    if (!closed) continue; // extend the window and retry
    // tail estimate from the |x|^{-2(d+1)} envelope of the banded kernel
    err += last_panel * last_u / (3.0 * du);
    double total = 2.0 * acc.value();
    return {total, 2.0 * err};
  }
  throw QuadratureError("band_kernel_l1: spatial tail did not close", -1.0, quad.abs_tol);
}

} // namespace

double band_kernel_l1(double alpha, double t, int j, double p, const BumpProfile &profile,
                      const QuadControl &quad) {
  if (!(alpha > 0.0 && alpha <= 2.0))
    throw std::invalid_argument("band_kernel_l1: alpha must lie in (0, 2]");
  if (j < 1) throw std::invalid_argument("band_kernel_l1: j must be >= 1");
  if (!(t >= 0.0)) throw std::invalid_argument("band_kernel_l1: t must be nonnegative");
  auto res = band_l1_unweighted(alpha, t, j, profile, quad);
  double prefactor = std::pow(2.0, j * alpha / p);
  double value = prefactor * res.value;
  double target = std::max(quad.abs_tol, quad.rel_tol * value);
  if (prefactor * res.error > std::max(target, 1e-7 * value))
    throw QuadratureError("band_kernel_l1: requested tolerance not met",
                          prefactor * res.error, target);
  return value;
}

KernelSample sample_band_kernel(double alpha, double t, int j, double p,
                                const BumpProfile &profile, const std::vector<double> &radii,
                                const QuadControl &quad) {
  KernelSample sample;
  sample.alpha = alpha;
  sample.t = t;
  sample.j = j;
  sample.p_weight = p;
  sample.radii = radii;
  sample.values.reserve(radii.size());
  if (j >= 1) {
    double u_cap = 96.0;
    for (double r : radii) u_cap = std::max(u_cap, std::abs(r) * std::ldexp(1.0, j) + 8.0);
    BandKernelRule rule(alpha, t, j, profile, u_cap);
    double prefactor = std::pow(2.0, j * alpha / p);
    for (double r : radii) sample.values.push_back(prefactor * std::abs(rule.value(r)));
    sample.l1_value = band_kernel_l1(alpha, t, j, p, profile, quad);
  } else {
    for (double r : radii) sample.values.push_back(std::abs(kernel_eval(alpha, t, r, quad)));
  }
  return sample;
}

namespace {

constexpr int kDecayFitBand = 3; // reference band for the G(tau) table

// G(tau) table over the fit window [1, 30] plus the exponential fit.
void measure_decay_table(double alpha, double p, const BumpProfile &profile,
                         const QuadControl &quad, DecayReport &report) {
  report.taus = {1, 2, 3, 5, 7, 10, 14, 19, 25, 30};
  const double prefactor = std::pow(2.0, kDecayFitBand * alpha / p);
  std::vector<double> log_g;
  for (double tau : report.taus) {
    double t = tau * std::pow(2.0, -kDecayFitBand * alpha);
    double g = band_kernel_l1(alpha, t, kDecayFitBand, p, profile, quad) / prefactor;
    report.g_values.push_back(g);
    log_g.push_back(std::log(g));
  }
  auto fit = detail::fit_line(report.taus, log_g);
  report.rate_c = -fit.slope;
  report.constant_upper = std::exp(fit.intercept);
  for (std::size_t i = 0; i < report.taus.size(); ++i)
    report.fit_residuals.push_back(log_g[i] - fit.intercept - fit.slope * report.taus[i]);
}

} // namespace

DecayFit fit_decay_rate(double alpha, const BumpProfile &profile, const QuadControl &quad) {
  DecayReport table;
  measure_decay_table(alpha, 2.0, profile, quad, table);
  return {table.rate_c, table.constant_upper};
}

DecayReport decay_bound_report(double alpha, double p, const BumpProfile &profile,
                               const QuadControl &quad) {
  DecayReport report;
  report.alpha = alpha;
  report.p = p;
  report.profile = profile.kind();
  measure_decay_table(alpha, p, profile, quad, report);
  const int j_ref = kDecayFitBand;
  const double prefactor_ref = std::pow(2.0, j_ref * alpha / p);

  // l1 across j at fixed tau collapses to the common prefactor 2^{j alpha/p}
  std::vector<double> js, log2_l1;
  for (int j = 2; j <= 5; ++j) {
    double t = std::pow(2.0, -j * alpha);
    js.push_back(j);
    log2_l1.push_back(std::log2(band_kernel_l1(alpha, t, j, p, profile, quad)));
  }
  report.prefactor_slope = detail::fit_line(js, log2_l1).slope;

  // pointwise envelope: |P_j| (1 + 4 pi^2 |2^j x|^2)^{d+1} against the
  // fitted e^{-c tau} scaling, d = 1
  const double four_pi_sq = 4.0 * std::numbers::pi * std::numbers::pi;
  double c_prime = 0.0;
  for (double tau : {1.0, 5.0, 15.0}) {
    double t = tau * std::pow(2.0, -j_ref * alpha);
    std::vector<double> radii;
    for (int i = 0; i <= 64; ++i) radii.push_back(i * 0.25 * std::ldexp(1.0, -j_ref));
    auto sample = sample_band_kernel(alpha, t, j_ref, p, profile, radii, quad);
    double denom = prefactor_ref * std::ldexp(1.0, j_ref) * std::exp(-report.rate_c * tau);
    for (std::size_t i = 0; i < radii.size(); ++i) {
      double u = radii[i] * std::ldexp(1.0, j_ref);
      double envelope = std::pow(1.0 + four_pi_sq * u * u, 2.0);
      c_prime = std::max(c_prime, sample.values[i] * envelope / denom);
    }
  }
  report.pointwise_constant = c_prime;
  return report;
}

std::string decay_report_csv(const DecayReport &report) {
  std::ostringstream out;
  out << "tau,G,fit_residual\n";
  for (std::size_t i = 0; i < report.taus.size(); ++i)
    out << detail::format_double(report.taus[i]) << ','
        << detail::format_double(report.g_values[i]) << ','
        << detail::format_double(report.fit_residuals[i]) << '\n';
  return out.str();
}

std::string decay_report_json(const DecayReport &report) {
  nlohmann::json j;
  j["alpha"] = report.alpha;
  j["p"] = report.p;
  j["profile"] = BumpProfile(report.profile).name();
  j["c"] = report.rate_c;
  j["C"] = report.constant_upper;
  j["C_prime"] = report.pointwise_constant;
  j["prefactor_slope"] = report.prefactor_slope;
  return j.dump(2) + "\n";
}

} // namespace fracsmooth
