#pragma once

#include <complex>
#include <span>

namespace fracsmooth {

// r_j(z) = r_1(2^{j-1} z) with r_1 = 1 on [0, 1/2], -1 on (1/2, 1),
// extended 1-periodically.  j >= 1, z in [0, 1).
int rademacher_value(int j, double z);

struct KhinchineReport {
  int n = 0;
  double p = 2.0;
  double lhs = 0.0;      // (sum |c_j|^2)^{p/2}
  double integral = 0.0; // int_0^1 |sum c_j r_j(z)|^p dz, exact
  double ratio = 0.0;    // integral / lhs
};

// The z-integral is constant on dyadic cells, so averaging |sum eps_j c_j|^p
// over all 2^n sign vectors evaluates it exactly.  n <= 22.
KhinchineReport khinchine_exact(std::span<const std::complex<double>> c, double p);

} // namespace fracsmooth
