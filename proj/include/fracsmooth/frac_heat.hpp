#pragma once

#include "fracsmooth/field.hpp"

namespace fracsmooth {

struct HeatParams {
  double alpha = 2.0; // in (0, 2]
  double t = 0.0;     // >= 0

  HeatParams(double a, double time);
};

// Semigroup multiplier e^{-t |xi|^alpha} with xi = k/L (value 1 at xi = 0).
SpectralField semigroup_apply(const SpectralField &field, const HeatParams &params);

// (1 - e^{-dt mu}) / mu, switching to the series dt (1 - dt mu / 2) once
// dt * mu < 1e-8 to dodge the cancellation in the quotient.
double phi1(double mu, double dt);

// Duhamel integral of the semigroup against f, integrated exactly per
// Fourier mode for forcing held constant on each step (left endpoint):
//   u_{n+1}(k) = e^{-dt mu} u_n(k) + phi1(mu, dt) f_n(k),   u_0 = 0,
// with mu = |k/L|^alpha.  Output frame n approximates the convolution at
// t_n; frame 0 is identically zero.
SpaceTimeField duhamel_apply(const SpaceTimeField &f, double alpha);

} // namespace fracsmooth
