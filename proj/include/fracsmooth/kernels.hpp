#pragma once

#include <stdexcept>
#include <vector>

#include "fracsmooth/bump_profile.hpp"

namespace fracsmooth {

struct QuadControl {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_depth = 15; // adaptive bisection depth per panel
};

struct QuadratureError : std::runtime_error {
  QuadratureError(const std::string &what, double achieved_, double requested_)
      : std::runtime_error(what), achieved(achieved_), requested(requested_) {}
  double achieved;
  double requested;
};

// P(t, x) = int_R e^{2 pi i x xi} e^{-t |xi|^alpha} d xi evaluated by
// radial quadrature with a rigorous exponential tail bound (d = 1, t > 0).
double kernel_eval(double alpha, double t, double x, const QuadControl &quad = {});

// Closed forms used as independent references for the quadrature path.
double gaussian_kernel_1d(double t, double x); // alpha = 2
double poisson_kernel_1d(double t, double x);  // alpha = 1
double kernel_at_origin_1d(double alpha, double t); // (2/alpha) t^{-1/alpha} Gamma(1/alpha)

// int_R |P_j(t, x)| dx for the banded kernel
//   P_j(t, x) = 2^{j alpha / p} int e^{2 pi i x xi} psi(2^{-j} xi) e^{-t |xi|^alpha} d xi
// (d = 1, j >= 1, t >= 0).  The band-limited inner integral is evaluated on
// an oscillation-resolving Gauss-Legendre rule; the outer integral is
// truncated where the |x|^{-2(d+1)} envelope makes the tail negligible.
double band_kernel_l1(double alpha, double t, int j, double p,
                      const BumpProfile &profile, const QuadControl &quad = {});

// |P_j| sampled on a radial grid (j = 0 means the un-banded kernel).
struct KernelSample {
  double alpha = 0.0;
  double t = 0.0;
  int j = 0;
  double p_weight = 2.0;
  std::vector<double> radii;
  std::vector<double> values;
  double l1_value = 0.0;
};

KernelSample sample_band_kernel(double alpha, double t, int j, double p,
                                const BumpProfile &profile, const std::vector<double> &radii,
                                const QuadControl &quad = {});

// Measured decay profile of the banded kernel: G(tau), rescaled so that
// band_kernel_l1(alpha, t, j, p) = 2^{j alpha / p} G(t 2^{j alpha}).
struct DecayReport {
  double alpha = 0.0;
  double p = 2.0;
  ProfileKind profile = ProfileKind::smooth_exponential;
  std::vector<double> taus;
  std::vector<double> g_values;
  std::vector<double> fit_residuals; // log-scale residual per tau point
  double rate_c = 0.0;               // fitted exponential rate, G ~ C e^{-c tau}
  double constant_upper = 0.0;       // fitted C
  double pointwise_constant = 0.0;   // C' of the envelope check
  double prefactor_slope = 0.0;      // log2 slope of l1 across j at fixed tau
};

DecayReport decay_bound_report(double alpha, double p, const BumpProfile &profile,
                               const QuadControl &quad = {});

// Just the G(tau) table and exponential fit (the cheap part of the report);
// the rate feeds the dyadic near/far diagnostics.
struct DecayFit {
  double rate_c = 0.0;
  double constant = 0.0;
};
DecayFit fit_decay_rate(double alpha, const BumpProfile &profile, const QuadControl &quad = {});

std::string decay_report_csv(const DecayReport &report);
std::string decay_report_json(const DecayReport &report);

} // namespace fracsmooth
