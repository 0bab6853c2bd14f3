#pragma once

#include <array>
#include <functional>

#include "fracsmooth/field.hpp"

namespace fracsmooth {

// Forward transform, convention f_hat(k) = (L/N)^d sum_x f(x) e^{-2 pi i k.x/L}.
// A unit character at k0 maps to coefficient L^d at k0.
SpectralField forward_transform(const RealField &field);

// Exact inverse of forward_transform on the lattice.
RealField inverse_transform(const SpectralField &field);

// Diagonal action coeffs_out(k) = m(k/L) coeffs_in(k).  The multiplier is
// evaluated on the physical frequency xi = k/L.  A non-finite multiplier
// value raises std::runtime_error naming the offending frequency.
using Multiplier = std::function<cplx(const std::array<double, 2> &xi)>;
SpectralField apply_multiplier(const SpectralField &field, const Multiplier &m);

// Same action with a pre-sampled real multiplier array in lattice order.
SpectralField apply_sampled_multiplier(const SpectralField &field, const std::vector<double> &m);

// Riemann-sum norm ((L/N)^d sum |f|^p)^{1/p}, p in [1, inf).
double lp_norm(const RealField &field, double p);

// sup-norm max_x |f(x)| (the p = infinity mode)
double max_norm(const RealField &field);

// Right-endpoint space-time norm ((T/M) sum_{n=1..M} spatial(frame_n)^p)^{1/p}.
double space_time_lp_norm(const SpaceTimeField &field, double p,
                          const std::function<double(const RealField &)> &spatial_norm);

} // namespace fracsmooth
