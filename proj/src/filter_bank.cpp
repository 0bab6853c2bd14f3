#include "fracsmooth/filter_bank.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracsmooth/spectral.hpp"
#include "util.hpp"

namespace fracsmooth {

const std::vector<double> &FilterBank::band(int j) const {
  if (j < 1 || j > j_max)
    throw std::out_of_range("FilterBank: band index " + std::to_string(j) +
                            " outside [1, " + std::to_string(j_max) + "]");
  return band_filters[static_cast<std::size_t>(j - 1)];
}

FilterBank build_filter_bank(const TorusGrid &grid, const BumpProfile &profile) {
  int j_max = static_cast<int>(std::floor(std::log2(grid.nyquist_radius()))) - 1;
  if (j_max < 2)
    throw std::invalid_argument(
        "build_filter_bank: grid too small, needs at least two dyadic bands "
        "(N >= 16 on the unit torus); got j_max = " + std::to_string(j_max));

  FilterBank bank{grid, profile, j_max, {}, {}};
  std::size_t total = grid.total_points();
  bank.s0_filter.resize(total);
  bank.band_filters.assign(static_cast<std::size_t>(j_max), std::vector<double>(total));
  for (std::size_t i = 0; i < total; ++i) {
    double r = grid.freq_radius(i);
    bank.s0_filter[i] = profile.phi(r);
    // scale by exact powers of two so the dyadic telescoping cancels bitwise
    for (int j = 1; j <= j_max; ++j)
      bank.band_filters[static_cast<std::size_t>(j - 1)][i] = profile.psi(std::ldexp(r, -j));
  }
  return bank;
}

SpectralField s0(const SpectralField &field, const FilterBank &bank) {
  if (!(field.grid == bank.grid))
    throw std::invalid_argument("s0: field and filter bank grids differ");
  return apply_sampled_multiplier(field, bank.s0_filter);
}

SpectralField delta_j(const SpectralField &field, int j, const FilterBank &bank) {
  if (!(field.grid == bank.grid))
    throw std::invalid_argument("delta_j: field and filter bank grids differ");
  return apply_sampled_multiplier(field, bank.band(j));
}

double partition_residual(const FilterBank &bank) {
  double cutoff = std::ldexp(1.0, bank.j_max);
  double worst = 0.0;
  for (std::size_t i = 0; i < bank.grid.total_points(); ++i) {
    if (bank.grid.freq_radius(i) > cutoff) continue;
    double sum = bank.s0_filter[i];
    for (const auto &band : bank.band_filters) sum += band[i];
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

double band_overlap_check(const SpaceTimeField &f, int j, double alpha,
                          const FilterBank &bank, const TimeOperator &op) {
  if (j < 2 || j > bank.j_max - 1)
    throw std::out_of_range("band_overlap_check: need 2 <= j <= j_max - 1");

  // overlap-projected copy of f: (Delta_{j-1} + Delta_j + Delta_{j+1}) f
  SpaceTimeField g = f;
  for (auto &frame : g.frames) {
    SpectralField spec = forward_transform(frame);
    SpectralField sum(spec.grid);
    for (int i = j - 1; i <= j + 1; ++i) {
      SpectralField part = delta_j(spec, i, bank);
      for (std::size_t m = 0; m < sum.coeffs.size(); ++m) sum.coeffs[m] += part.coeffs[m];
    }
    frame = inverse_transform(sum);
  }

  SpaceTimeField uf = op(f, alpha);
  SpaceTimeField ug = op(g, alpha);

  double max_dist = 0.0, max_ref = 0.0;
  for (std::size_t n = 0; n < uf.frames.size(); ++n) {
    RealField a = inverse_transform(delta_j(forward_transform(uf.frames[n]), j, bank));
    RealField b = inverse_transform(delta_j(forward_transform(ug.frames[n]), j, bank));
    RealField diff(a.grid);
    for (std::size_t m = 0; m < diff.values.size(); ++m)
      diff.values[m] = a.values[m] - b.values[m];
    max_dist = std::max(max_dist, lp_norm(diff, 2.0));
    max_ref = std::max(max_ref, lp_norm(a, 2.0));
  }
  return max_ref > 0.0 ? max_dist / max_ref : max_dist;
}

} // namespace fracsmooth
