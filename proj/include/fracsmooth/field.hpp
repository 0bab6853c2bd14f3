#pragma once

#include <complex>
#include <vector>

#include "fracsmooth/torus_grid.hpp"

namespace fracsmooth {

using cplx = std::complex<double>;

// Samples of a function of space at the N^d grid points, row-major.
// Values may be complex; real-valued inputs are the common case.
struct RealField {
  TorusGrid grid;
  std::vector<cplx> values;

  RealField() = default;
  explicit RealField(const TorusGrid &g) : grid(g), values(g.total_points()) {}
  RealField(const TorusGrid &g, std::vector<cplx> v);

  // largest |Im f| relative to the largest |f|
  double imaginary_defect() const;
};

// Fourier coefficients on the frequency lattice, DFT storage order.
struct SpectralField {
  TorusGrid grid;
  std::vector<cplx> coeffs;

  SpectralField() = default;
  explicit SpectralField(const TorusGrid &g) : grid(g), coeffs(g.total_points()) {}
  SpectralField(const TorusGrid &g, std::vector<cplx> c);

  // max |c(-k) - conj(c(k))| over the lattice, relative to max |c|
  double conjugate_symmetry_defect() const;
};

// Time-indexed fields on the uniform grid t_n = n T / M, n = 0..M.
struct SpaceTimeField {
  TorusGrid grid;
  double t_final = 1.0;
  int steps = 1;
  std::vector<RealField> frames; // M + 1 entries, frame 0 at t = 0

  SpaceTimeField() = default;
  SpaceTimeField(const TorusGrid &g, double T, int M);
  SpaceTimeField(const TorusGrid &g, double T, std::vector<RealField> fr);

  double dt() const { return t_final / steps; }
  double frame_time(int n) const { return n * t_final / steps; }
};

// f(x) = value at every grid point
RealField make_constant(const TorusGrid &grid, cplx value);
// f(x) = e^{2 pi i k.x / L}, a single lattice character
RealField make_character(const TorusGrid &grid, int k0, int k1 = 0);

} // namespace fracsmooth
