#include "fracsmooth/function_spaces.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracsmooth/spectral.hpp"
#include "util.hpp"

namespace fracsmooth {

bool TLIndex::valid() const {
  return p >= 1.0 && !std::isinf(p) && std::isfinite(s) && q >= 1.0;
}

bool TLIndex::inside_hypothesis() const {
  return valid() && 2.0 <= q && q <= p;
}

std::vector<RealField> band_decomposition(const RealField &field, const FilterBank &bank) {
  SpectralField spec = forward_transform(field);
  std::vector<RealField> parts;
  parts.reserve(static_cast<std::size_t>(bank.j_max) + 1);
  parts.push_back(inverse_transform(s0(spec, bank)));
  for (int j = 1; j <= bank.j_max; ++j)
    parts.push_back(inverse_transform(delta_j(spec, j, bank)));
  return parts;
}

double tl_norm(const RealField &field, const TLIndex &idx, const FilterBank &bank) {
  if (!idx.valid()) throw std::invalid_argument("tl_norm: invalid (s, p, q) index");
  auto parts = band_decomposition(field, bank);

  double low = lp_norm(parts[0], idx.p);

  // pointwise l^q aggregate of the weighted bands
  std::size_t total = field.grid.total_points();
  RealField aggregate(field.grid);
  bool q_inf = std::isinf(idx.q);
  std::vector<double> weights(static_cast<std::size_t>(bank.j_max) + 1, 0.0);
  for (int j = 1; j <= bank.j_max; ++j)
    weights[static_cast<std::size_t>(j)] = std::pow(2.0, idx.s * j);
  for (std::size_t i = 0; i < total; ++i) {
    double acc = 0.0;
    for (int j = 1; j <= bank.j_max; ++j) {
      double term = weights[static_cast<std::size_t>(j)] *
                    std::abs(parts[static_cast<std::size_t>(j)].values[i]);
      if (q_inf)
        acc = std::max(acc, term);
      else
        acc += detail::pow_abs_from_sq(term * term, idx.q);
    }
    aggregate.values[i] = q_inf ? acc : std::pow(acc, 1.0 / idx.q);
  }
  return low + lp_norm(aggregate, idx.p);
}

double space_time_tl_norm(const SpaceTimeField &field, const TLIndex &idx, const FilterBank &bank) {
  return space_time_lp_norm(field, idx.p,
                            [&](const RealField &f) { return tl_norm(f, idx, bank); });
}

double bessel_sobolev_norm(const RealField &field, double s, double p) {
  if (!(p > 1.0) || std::isinf(p))
    throw std::domain_error("bessel_sobolev_norm: requires 1 < p < inf");
  SpectralField spec = forward_transform(field);
  const double four_pi_sq = 4.0 * std::numbers::pi * std::numbers::pi;
  for (std::size_t i = 0; i < spec.coeffs.size(); ++i) {
    double r = spec.grid.freq_radius(i);
    spec.coeffs[i] *= std::pow(1.0 + four_pi_sq * r * r, 0.5 * s);
  }
  return lp_norm(inverse_transform(spec), p);
}

} // namespace fracsmooth
