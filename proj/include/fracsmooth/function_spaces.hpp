#pragma once

#include <limits>
#include <vector>

#include "fracsmooth/field.hpp"
#include "fracsmooth/filter_bank.hpp"

namespace fracsmooth {

// Smoothness/integrability indices (s, p, q) of the discrete scale of
// spaces.  q may be infinity (pointwise sup over bands).
struct TLIndex {
  double s = 0.0;
  double p = 2.0;
  double q = 2.0;

  bool valid() const;
  // the estimate's hypothesis window 2 <= q <= p < inf
  bool inside_hypothesis() const;
  TLIndex shifted(double sigma) const { return {s + sigma, p, q}; }

  static constexpr double q_infinity = std::numeric_limits<double>::infinity();
};

// Physical-space band decomposition: entry 0 is the low-pass part S_0 f,
// entry j is Delta_j f for j = 1..j_max.
std::vector<RealField> band_decomposition(const RealField &field, const FilterBank &bank);

// ||S_0 f||_p + || ( sum_j (2^{js} |Delta_j f|)^q )^{1/q} ||_p
double tl_norm(const RealField &field, const TLIndex &idx, const FilterBank &bank);

// Right-endpoint time aggregation of tl_norm over the frames.
double space_time_tl_norm(const SpaceTimeField &field, const TLIndex &idx, const FilterBank &bank);

// L^p norm after the Bessel multiplier (1 + |2 pi xi|^2)^{s/2}; requires
// 1 < p < inf.  Comparable (not equal) to tl_norm at q = 2.
double bessel_sobolev_norm(const RealField &field, double s, double p);

} // namespace fracsmooth
