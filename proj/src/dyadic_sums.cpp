#include "fracsmooth/dyadic_sums.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracsmooth/spectral.hpp"
#include "util.hpp"

namespace fracsmooth {

DyadicSums dyadic_split_sums(const SpaceTimeField &f, double alpha, double p,
                             const FilterBank &bank, double decay_rate_c) {
  if (!(alpha > 0.0 && alpha <= 2.0))
    throw std::invalid_argument("dyadic_split_sums: alpha must lie in (0, 2]");
  if (!(p >= 1.0)) throw std::invalid_argument("dyadic_split_sums: p must be >= 1");
  if (!(decay_rate_c > 0.0))
    throw std::invalid_argument("dyadic_split_sums: decay rate must be positive");

  const int j_max = bank.j_max;
  const int steps = f.steps;
  const double dt = f.dt();

  // band L^p norms per frame, right-endpoint time lattice
  std::vector<std::vector<double>> band_norm(static_cast<std::size_t>(j_max) + 1,
                                             std::vector<double>(static_cast<std::size_t>(steps) + 1, 0.0));
  for (int n = 1; n <= steps; ++n) {
    SpectralField spec = forward_transform(f.frames[static_cast<std::size_t>(n)]);
    for (int j = 1; j <= j_max; ++j)
      band_norm[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] =
          lp_norm(inverse_transform(delta_j(spec, j, bank)), p);
  }

  std::vector<double> scale(static_cast<std::size_t>(j_max) + 1, 0.0);  // 2^{j alpha}
  std::vector<double> weight(static_cast<std::size_t>(j_max) + 1, 0.0); // 2^{j alpha / p}
  for (int j = 1; j <= j_max; ++j) {
    scale[static_cast<std::size_t>(j)] = std::pow(2.0, j * alpha);
    weight[static_cast<std::size_t>(j)] = std::pow(2.0, j * alpha / p);
  }

  DyadicSums sums;
  detail::KahanSum near_acc, far_acc;
  for (int n = 1; n <= steps; ++n) {
    for (int m = 1; m <= n; ++m) {
      double gap = (n - m) * dt;
      double near = 0.0, far = 0.0;
      for (int j = 1; j <= j_max; ++j) {
        double tau = gap * scale[static_cast<std::size_t>(j)];
        double term = weight[static_cast<std::size_t>(j)] * std::exp(-decay_rate_c * tau) *
                      band_norm[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
        (tau <= 1.0 ? near : far) += term;
      }
      near_acc.add(std::pow(near, p));
      far_acc.add(std::pow(far, p));
    }
  }
  sums.near_sum = dt * dt * near_acc.value();
  sums.far_sum = dt * dt * far_acc.value();

  detail::KahanSum rhs;
  for (int j = 1; j <= j_max; ++j)
    for (int n = 1; n <= steps; ++n)
      rhs.add(std::pow(band_norm[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)], p));
  sums.rhs = dt * rhs.value();
  return sums;
}

double near_weight_sum(double delta, double alpha, double p) {
  if (!(delta > 0.0)) throw std::invalid_argument("near_weight_sum: delta must be positive");
  if (!(p > 1.0)) throw std::invalid_argument("near_weight_sum: p must exceed 1");
  double exponent = alpha / (2.0 * (p - 1.0));
  double sum = 0.0;
  for (int j = 1; j <= 4000; ++j) {
    if (delta * std::pow(2.0, j * alpha) > 1.0) break;
    sum += std::pow(2.0, j * exponent);
  }
  return std::pow(sum, p - 1.0);
}

double far_weight_sum(double delta, double alpha, double p, double c_tilde) {
  if (!(delta > 0.0)) throw std::invalid_argument("far_weight_sum: delta must be positive");
  if (!(p > 1.0)) throw std::invalid_argument("far_weight_sum: p must exceed 1");
  if (!(c_tilde > 0.0)) throw std::invalid_argument("far_weight_sum: c_tilde must be positive");
  double exponent = 2.0 * alpha / (p - 1.0);
  detail::KahanSum sum;
  for (int j = 1; j <= 4000; ++j) {
    double tau = delta * std::pow(2.0, j * alpha);
    if (tau <= 1.0) continue;
    double log_term = j * exponent * std::numbers::ln2 - c_tilde * tau;
    if (log_term < -745.0) break;
    sum.add(std::exp(log_term));
  }
  return std::pow(sum.value(), p - 1.0);
}

} // namespace fracsmooth
