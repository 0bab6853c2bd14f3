#pragma once

#include <functional>
#include <vector>

#include "fracsmooth/bump_profile.hpp"
#include "fracsmooth/field.hpp"

namespace fracsmooth {

// Sampled dyadic filters on the frequency lattice.  Band j carries the
// window psi(2^{-j}|xi|), supported on 2^{j-1} <= |xi| <= 2^{j+1}; the
// level count j_max = floor(log2(N/2L)) - 1 keeps every retained band
// fully resolved by the lattice.
struct FilterBank {
  TorusGrid grid;
  BumpProfile profile;
  int j_max = 0;
  std::vector<double> s0_filter;                 // phi(|xi|) per lattice point
  std::vector<std::vector<double>> band_filters; // [j-1] -> psi(2^{-j}|xi|)

  const std::vector<double> &band(int j) const;  // 1 <= j <= j_max
};

// Throws std::invalid_argument when the grid cannot host two bands
// (j_max < 2, i.e. N < 16 on the unit torus).
FilterBank build_filter_bank(const TorusGrid &grid, const BumpProfile &profile);

// Low-frequency projection (multiplier phi(|xi|)).
SpectralField s0(const SpectralField &field, const FilterBank &bank);

// Dyadic band projection (multiplier psi(2^{-j}|xi|)).
SpectralField delta_j(const SpectralField &field, int j, const FilterBank &bank);

// max over lattice |xi| <= 2^{j_max} of |phi + sum_j psi_j - 1|; the
// telescoping sum makes this vanish to rounding.
double partition_residual(const FilterBank &bank);

// A time-dependent operator parameterized by alpha (the Duhamel map).
using TimeOperator = std::function<SpaceTimeField(const SpaceTimeField &, double)>;

// Relative residual of Delta_j op(f) against Delta_j op((Delta_{j-1} +
// Delta_j + Delta_{j+1}) f): max over frames of the L2 distance divided by
// the largest frame L2 norm of Delta_j op(f).  Requires 2 <= j <= j_max-1.
double band_overlap_check(const SpaceTimeField &f, int j, double alpha,
                          const FilterBank &bank, const TimeOperator &op);

} // namespace fracsmooth
