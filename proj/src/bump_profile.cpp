#include "fracsmooth/bump_profile.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracsmooth {

namespace {

inline double h_exp(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

} // namespace

double BumpProfile::phi(double r) const {
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  if (kind_ == ProfileKind::smooth_exponential) {
    // C^infinity glue: h(2-r) / (h(2-r) + h(r-1)) with h(x) = e^{-1/x}
    double a = h_exp(2.0 - r);
    double b = h_exp(r - 1.0);
    return a / (a + b);
  }
  // quintic smoothstep in the transition variable u = r - 1 (C^2 at the ends)
  double u = r - 1.0;
  double s = u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
  return 1.0 - s;
}

const char *BumpProfile::name() const {
  return kind_ == ProfileKind::smooth_exponential ? "smooth_exponential" : "polynomial_c2";
}

BumpProfile make_profile(ProfileKind kind) { return BumpProfile(kind); }

BumpProfile make_profile(std::string_view name) {
  if (name == "smooth_exponential") return BumpProfile(ProfileKind::smooth_exponential);
  if (name == "polynomial_c2") return BumpProfile(ProfileKind::polynomial_c2);
  throw std::invalid_argument("unknown profile kind: " + std::string(name));
}

} // namespace fracsmooth
