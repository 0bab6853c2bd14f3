#include "fracsmooth/frac_heat.hpp"

#include <cmath>
#include <stdexcept>

#include "fracsmooth/spectral.hpp"

namespace fracsmooth {

HeatParams::HeatParams(double a, double time) : alpha(a), t(time) {
  if (!(alpha > 0.0 && alpha <= 2.0))
    throw std::invalid_argument("HeatParams: alpha must lie in (0, 2]");
  if (!(t >= 0.0)) throw std::invalid_argument("HeatParams: t must be nonnegative");
}

SpectralField semigroup_apply(const SpectralField &field, const HeatParams &params) {
  SpectralField out(field.grid);
  for (std::size_t i = 0; i < field.coeffs.size(); ++i) {
    double r = field.grid.freq_radius(i);
    double mu = r > 0.0 ? std::pow(r, params.alpha) : 0.0;
    out.coeffs[i] = std::exp(-params.t * mu) * field.coeffs[i];
  }
  return out;
}

double phi1(double mu, double dt) {
  double x = dt * mu;
  if (x < 1e-8) return dt * (1.0 - 0.5 * x);
  return (1.0 - std::exp(-x)) / mu;
}

SpaceTimeField duhamel_apply(const SpaceTimeField &f, double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0))
    throw std::invalid_argument("duhamel_apply: alpha must lie in (0, 2]");

  const int steps = f.steps;
  const double dt = f.dt();
  const std::size_t total = f.grid.total_points();

  // forcing spectra at the left endpoints t_0 .. t_{M-1}
  std::vector<SpectralField> forcing;
  forcing.reserve(static_cast<std::size_t>(steps));
  for (int n = 0; n < steps; ++n)
    forcing.push_back(forward_transform(f.frames[static_cast<std::size_t>(n)]));

  std::vector<double> decay(total), gain(total);
  for (std::size_t i = 0; i < total; ++i) {
    double r = f.grid.freq_radius(i);
    double mu = r > 0.0 ? std::pow(r, alpha) : 0.0;
    decay[i] = std::exp(-dt * mu);
    gain[i] = phi1(mu, dt);
  }

  SpaceTimeField out(f.grid, f.t_final, steps);
  SpectralField state(f.grid); // u_0 = 0
  out.frames[0] = inverse_transform(state);
  for (int n = 0; n < steps; ++n) {
    const auto &fn = forcing[static_cast<std::size_t>(n)].coeffs;
    for (std::size_t i = 0; i < total; ++i)
      state.coeffs[i] = decay[i] * state.coeffs[i] + gain[i] * fn[i];
    out.frames[static_cast<std::size_t>(n) + 1] = inverse_transform(state);
  }
  return out;
}

} // namespace fracsmooth
