#pragma once

// Internal helpers shared across the library sources.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace fracsmooth::detail {

// Compensated accumulator; keeps long sums accurate to a few ulps.
class KahanSum {
public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// |z|^p via the squared modulus, with fast paths for the common exponents.
inline double pow_abs_from_sq(double abs_sq, double p) {
  if (p == 2.0) return abs_sq;
  if (p == 4.0) return abs_sq * abs_sq;
  if (p == 6.0) return abs_sq * abs_sq * abs_sq;
  if (p == 1.0) return std::sqrt(abs_sq);
  return std::pow(abs_sq, 0.5 * p);
}

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

// Ordinary least squares y ~ intercept + slope * x.
LinearFit fit_line(const std::vector<double> &x, const std::vector<double> &y);

std::uint64_t fnv1a(std::string_view s);
std::uint64_t splitmix64(std::uint64_t x);

// Round-trippable decimal rendering used for all CSV/JSON numeric output.
std::string format_double(double v);
std::string utc_timestamp();

} // namespace fracsmooth::detail
