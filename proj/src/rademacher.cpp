#include "fracsmooth/rademacher.hpp"

#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>
#include <vector>

#include "util.hpp"

namespace fracsmooth {

int rademacher_value(int j, double z) {
  if (j < 1) throw std::domain_error("rademacher_value: j must be >= 1");
  if (!(z >= 0.0 && z < 1.0)) throw std::domain_error("rademacher_value: z must lie in [0, 1)");
  double y = std::ldexp(z, j - 1);
  y -= std::floor(y);
  return y <= 0.5 ? 1 : -1; // closed-left convention at the dyadic midpoint
}

namespace {

// Depth-first accumulation of |partial + sum eps_j c_j|^p over all sign
// choices of c[level..].  Partial sums are rebuilt along the recursion, so
// no rounding drift accumulates across the 2^n leaves.
void enumerate_signs(std::span<const std::complex<double>> c, std::size_t level, double re,
                     double im, double p, fracsmooth::detail::KahanSum &acc) {
  if (level == c.size()) {
    acc.add(fracsmooth::detail::pow_abs_from_sq(re * re + im * im, p));
    return;
  }
  const auto &z = c[level];
  enumerate_signs(c, level + 1, re + z.real(), im + z.imag(), p, acc);
  enumerate_signs(c, level + 1, re - z.real(), im - z.imag(), p, acc);
}

} // namespace

KhinchineReport khinchine_exact(std::span<const std::complex<double>> c, double p) {
  const int n = static_cast<int>(c.size());
  if (n < 1) throw std::invalid_argument("khinchine_exact: need at least one coefficient");
  if (n > 22)
    throw std::invalid_argument("khinchine_exact: n capped at 22 (2^n sign patterns)");
  if (!(p >= 1.0)) throw std::invalid_argument("khinchine_exact: p must be >= 1");

  detail::KahanSum sq;
  for (const auto &z : c) sq.add(std::norm(z));
  double lhs = detail::pow_abs_from_sq(sq.value(), p);

  // split over the signs of the leading coefficients; blocks are combined
  // in index order, so the result does not depend on the thread count
  int block_bits = n >= 16 ? 4 : 0;
  int blocks = 1 << block_bits;
  std::vector<std::future<double>> parts;
  parts.reserve(static_cast<std::size_t>(blocks));
  for (int b = 0; b < blocks; ++b) {
    parts.push_back(std::async(std::launch::async | std::launch::deferred, [&, b]() {
      double re = 0.0, im = 0.0;
      for (int i = 0; i < block_bits; ++i) {
        double sign = (b >> i) & 1 ? -1.0 : 1.0;
        re += sign * c[static_cast<std::size_t>(i)].real();
        im += sign * c[static_cast<std::size_t>(i)].imag();
      }
      detail::KahanSum acc;
      enumerate_signs(c, static_cast<std::size_t>(block_bits), re, im, p, acc);
      return acc.value();
    }));
  }
  detail::KahanSum total;
  for (auto &f : parts) total.add(f.get());

  KhinchineReport report;
  report.n = n;
  report.p = p;
  report.lhs = lhs;
  report.integral = std::ldexp(total.value(), -n); // divide by 2^n exactly
  report.ratio = lhs > 0.0 ? report.integral / lhs : 0.0;
  return report;
}

} // namespace fracsmooth
