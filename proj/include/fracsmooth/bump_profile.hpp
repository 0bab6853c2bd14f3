#pragma once

#include <string_view>

namespace fracsmooth {

enum class ProfileKind { smooth_exponential, polynomial_c2 };

// Radial cutoff profile phi: phi = 1 on [0,1], phi = 0 on [2,inf),
// strictly decreasing in between, values in [0,1].  The induced band
// window is psi(r) = phi(r) - phi(2r), supported on [1/2, 2].
class BumpProfile {
public:
  explicit BumpProfile(ProfileKind kind = ProfileKind::smooth_exponential) : kind_(kind) {}

  double phi(double r) const;
  double psi(double r) const { return phi(r) - phi(2.0 * r); }

  ProfileKind kind() const { return kind_; }
  const char *name() const;

private:
  ProfileKind kind_;
};

BumpProfile make_profile(ProfileKind kind);
// Accepts "smooth_exponential" or "polynomial_c2"; throws on anything else.
BumpProfile make_profile(std::string_view name);

} // namespace fracsmooth
