#include "fracsmooth/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "util.hpp"

namespace fracsmooth {

namespace {

// Process-wide FFTW plan cache.  Plans are created once per (dim, N, sign)
// with FFTW_ESTIMATE (deterministic plan choice) and FFTW_UNALIGNED so the
// new-array execute interface accepts any buffer.  Executing a cached plan
// on distinct arrays is thread-safe; only creation needs the lock.
class PlanCache {
public:
  fftw_plan get(int dim, int n, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_tuple(dim, n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::size_t total = dim == 1 ? static_cast<std::size_t>(n)
                                 : static_cast<std::size_t>(n) * n;
    std::vector<cplx> in(total), out(total);
    auto *pin = reinterpret_cast<fftw_complex *>(in.data());
    auto *pout = reinterpret_cast<fftw_complex *>(out.data());
    fftw_plan p = dim == 1
        ? fftw_plan_dft_1d(n, pin, pout, sign, FFTW_ESTIMATE | FFTW_UNALIGNED)
        : fftw_plan_dft_2d(n, n, pin, pout, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("FFTW plan creation failed");
    plans_.emplace(key, p);
    return p;
  }

  ~PlanCache() {
    for (auto &[k, p] : plans_) fftw_destroy_plan(p);
  }

private:
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache &plan_cache() {
  static PlanCache cache;
  return cache;
}

std::vector<cplx> run_dft(const TorusGrid &grid, const std::vector<cplx> &in, int sign) {
  fftw_plan plan = plan_cache().get(grid.dim, grid.points_per_axis, sign);
  std::vector<cplx> scratch(in);
  std::vector<cplx> out(in.size());
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex *>(scratch.data()),
                   reinterpret_cast<fftw_complex *>(out.data()));
  return out;
}

} // namespace

SpectralField forward_transform(const RealField &field) {
  SpectralField out(field.grid);
  out.coeffs = run_dft(field.grid, field.values, FFTW_FORWARD);
  double scale = field.grid.cell_measure();
  for (auto &c : out.coeffs) c *= scale;
  return out;
}

RealField inverse_transform(const SpectralField &field) {
  RealField out(field.grid);
  out.values = run_dft(field.grid, field.coeffs, FFTW_BACKWARD);
  double scale = std::pow(field.grid.side_length, -field.grid.dim);
  for (auto &v : out.values) v *= scale;
  return out;
}

SpectralField apply_multiplier(const SpectralField &field, const Multiplier &m) {
  SpectralField out(field.grid);
  for (std::size_t i = 0; i < field.coeffs.size(); ++i) {
    cplx mv = m(field.grid.freq_point(i));
    if (!std::isfinite(mv.real()) || !std::isfinite(mv.imag())) {
      auto k = field.grid.freq_vector(i);
      throw std::runtime_error("apply_multiplier: non-finite multiplier at frequency (" +
                               std::to_string(k[0]) + "," + std::to_string(k[1]) + ")");
    }
    out.coeffs[i] = mv * field.coeffs[i];
  }
  return out;
}

SpectralField apply_sampled_multiplier(const SpectralField &field, const std::vector<double> &m) {
  if (m.size() != field.coeffs.size())
    throw std::invalid_argument("apply_sampled_multiplier: size mismatch");
  SpectralField out(field.grid);
  for (std::size_t i = 0; i < field.coeffs.size(); ++i)
    out.coeffs[i] = m[i] * field.coeffs[i];
  return out;
}

double lp_norm(const RealField &field, double p) {
  if (!(p >= 1.0) || std::isinf(p))
    throw std::domain_error("lp_norm: p must lie in [1, inf); use max_norm for p = inf");
  detail::KahanSum acc;
  for (const auto &v : field.values)
    acc.add(detail::pow_abs_from_sq(std::norm(v), p));
  return std::pow(field.grid.cell_measure() * acc.value(), 1.0 / p);
}

double max_norm(const RealField &field) {
  double m = 0.0;
  for (const auto &v : field.values) m = std::max(m, std::abs(v));
  return m;
}

double space_time_lp_norm(const SpaceTimeField &field, double p,
                          const std::function<double(const RealField &)> &spatial_norm) {
  if (!(p >= 1.0) || std::isinf(p))
    throw std::domain_error("space_time_lp_norm: p must lie in [1, inf)");
  detail::KahanSum acc;
  for (int n = 1; n <= field.steps; ++n)
    acc.add(std::pow(spatial_norm(field.frames[static_cast<std::size_t>(n)]), p));
  return std::pow(field.dt() * acc.value(), 1.0 / p);
}

} // namespace fracsmooth
