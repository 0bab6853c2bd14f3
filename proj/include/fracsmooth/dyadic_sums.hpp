#pragma once

#include "fracsmooth/field.hpp"
#include "fracsmooth/filter_bank.hpp"

namespace fracsmooth {

// Discrete near/far split of the proof's time-frequency double sum.  With
// B_j(m) = ||Delta_j f(t_m, .)||_p and gap = t_n - t_m,
//   near_sum = dt^2 sum_n sum_{m<=n} ( sum_{gap 2^{j a} <= 1} 2^{j a/p} e^{-c gap 2^{j a}} B_j(m) )^p
//   far_sum  = same with gap 2^{j a} > 1,
//   rhs      = dt sum_j sum_n B_j(n)^p.
struct DyadicSums {
  double near_sum = 0.0; // quantity I
  double far_sum = 0.0;  // quantity II
  double rhs = 0.0;      // sum_j of the band L^p mass
};

// decay_rate_c is the measured band-kernel decay rate for this alpha.
DyadicSums dyadic_split_sums(const SpaceTimeField &f, double alpha, double p,
                             const FilterBank &bank, double decay_rate_c);

// Scalar weight sums behind the two geometric-series bounds; both are pure
// functions of the gap delta = t - s.
//   near: ( sum_{delta 2^{j a} <= 1, j >= 1} 2^{j a / (2(p-1))} )^{p-1}  ~ delta^{-1/2}
//   far:  ( sum_{delta 2^{j a} > 1}  2^{2 j a / (p-1)} e^{-c~ delta 2^{j a}} )^{p-1} ~ delta^{-2}
double near_weight_sum(double delta, double alpha, double p);
double far_weight_sum(double delta, double alpha, double p, double c_tilde);

} // namespace fracsmooth
