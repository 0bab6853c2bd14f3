#include "fracsmooth/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace fracsmooth {

RealField::RealField(const TorusGrid &g, std::vector<cplx> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.total_points())
    throw std::invalid_argument("RealField: value count must equal N^d");
}

double RealField::imaginary_defect() const {
  double max_im = 0.0, max_abs = 0.0;
  for (const auto &v : values) {
    max_im = std::max(max_im, std::abs(v.imag()));
    max_abs = std::max(max_abs, std::abs(v));
  }
  return max_abs > 0.0 ? max_im / max_abs : 0.0;
}

SpectralField::SpectralField(const TorusGrid &g, std::vector<cplx> c)
    : grid(g), coeffs(std::move(c)) {
  if (coeffs.size() != grid.total_points())
    throw std::invalid_argument("SpectralField: coefficient count must equal N^d");
}

double SpectralField::conjugate_symmetry_defect() const {
  double max_dev = 0.0, max_abs = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    max_abs = std::max(max_abs, std::abs(coeffs[i]));
    max_dev = std::max(max_dev, std::abs(coeffs[grid.negated_index(i)] - std::conj(coeffs[i])));
  }
  return max_abs > 0.0 ? max_dev / max_abs : 0.0;
}

SpaceTimeField::SpaceTimeField(const TorusGrid &g, double T, int M)
    : grid(g), t_final(T), steps(M) {
  if (!(T > 0.0)) throw std::invalid_argument("SpaceTimeField: T must be positive");
  if (M < 1) throw std::invalid_argument("SpaceTimeField: M must be >= 1");
  frames.assign(static_cast<std::size_t>(M) + 1, RealField(g));
}

SpaceTimeField::SpaceTimeField(const TorusGrid &g, double T, std::vector<RealField> fr)
    : grid(g), t_final(T), steps(static_cast<int>(fr.size()) - 1), frames(std::move(fr)) {
  if (!(T > 0.0)) throw std::invalid_argument("SpaceTimeField: T must be positive");
  if (frames.size() < 2) throw std::invalid_argument("SpaceTimeField: need at least 2 frames");
  for (const auto &f : frames)
    if (!(f.grid == grid))
      throw std::invalid_argument("SpaceTimeField: all frames must share the grid");
}

RealField make_constant(const TorusGrid &grid, cplx value) {
  RealField f(grid);
  for (auto &v : f.values) v = value;
  return f;
}

RealField make_character(const TorusGrid &grid, int k0, int k1) {
  RealField f(grid);
  int n = grid.points_per_axis;
  const double two_pi = 2.0 * std::numbers::pi;
  if (grid.dim == 1) {
    for (int m = 0; m < n; ++m) {
      double phase = two_pi * k0 * m / n;
      f.values[static_cast<std::size_t>(m)] = {std::cos(phase), std::sin(phase)};
    }
  } else {
    for (int m0 = 0; m0 < n; ++m0)
      for (int m1 = 0; m1 < n; ++m1) {
        double phase = two_pi * (static_cast<double>(k0) * m0 + static_cast<double>(k1) * m1) / n;
        f.values[static_cast<std::size_t>(m0) * n + m1] = {std::cos(phase), std::sin(phase)};
      }
  }
  return f;
}

} // namespace fracsmooth
