#include "fracsmooth/probes.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fracsmooth/frac_heat.hpp"
#include "fracsmooth/spectral.hpp"
#include "util.hpp"

namespace fracsmooth {

const char *probe_kind_name(ProbeKind kind) {
  switch (kind) {
    case ProbeKind::single_mode: return "single_mode";
    case ProbeKind::single_band: return "single_band";
    case ProbeKind::lacunary: return "lacunary";
    case ProbeKind::white_noise: return "white_noise";
    case ProbeKind::time_modulated: return "time_modulated";
  }
  return "?";
}

ProbeKind parse_probe_kind(std::string_view name) {
  for (ProbeKind k : {ProbeKind::single_mode, ProbeKind::single_band, ProbeKind::lacunary,
                      ProbeKind::white_noise, ProbeKind::time_modulated})
    if (name == probe_kind_name(k)) return k;
  throw std::invalid_argument("unknown probe kind: " + std::string(name));
}

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Pinned Gaussian source: mt19937_64 bits through Box-Muller.  Avoids the
// implementation-defined std::normal_distribution so streams are part of
// the reproducibility contract.
class GaussianSampler {
public:
  explicit GaussianSampler(std::uint64_t seed) : eng_(seed) {}

  double uniform01() { return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1p-53; }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double radius = std::sqrt(-2.0 * std::log(uniform01()));
    double angle = two_pi * uniform01();
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // E |z|^2 = 1
  cplx complex_gaussian() {
    constexpr double inv_sqrt2 = 0.70710678118654752;
    double re = gaussian(), im = gaussian();
    return {re * inv_sqrt2, im * inv_sqrt2};
  }

  std::uint64_t raw() { return eng_(); }

private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

void symmetrize_to_real(SpectralField &spec) {
  std::vector<cplx> sym(spec.coeffs.size());
  for (std::size_t i = 0; i < spec.coeffs.size(); ++i)
    sym[i] = 0.5 * (spec.coeffs[i] + std::conj(spec.coeffs[spec.grid.negated_index(i)]));
  spec.coeffs = std::move(sym);
}

// Gaussian coefficients on every lattice point with weight(|xi|) > 0, drawn
// in flat index order, then reflection-symmetrized.
SpectralField draw_band_noise(const TorusGrid &grid, GaussianSampler &rng,
                              const std::vector<double> &window) {
  SpectralField spec(grid);
  for (std::size_t i = 0; i < spec.coeffs.size(); ++i)
    if (window[i] > 0.0) spec.coeffs[i] = rng.complex_gaussian();
  symmetrize_to_real(spec);
  return spec;
}

double time_coefficient(TimeProfile profile, double t, double t_final, double omega) {
  switch (profile) {
    case TimeProfile::constant: return 1.0;
    case TimeProfile::step: return t < 0.5 * t_final ? 1.0 : 0.0;
    case TimeProfile::oscillating: return std::cos(two_pi * omega * t / t_final);
  }
  return 1.0;
}

const char *time_profile_name(TimeProfile p) {
  switch (p) {
    case TimeProfile::constant: return "const";
    case TimeProfile::step: return "step";
    case TimeProfile::oscillating: return "osc";
  }
  return "?";
}

} // namespace

std::string ProbeSpec::digest() const {
  std::ostringstream out;
  out << probe_kind_name(kind) << '(';
  if (kind == ProbeKind::single_mode)
    out << "k=" << mode[0] << '.' << mode[1] << ';';
  if (kind == ProbeKind::single_band) out << "j=" << band_j << ';';
  if (kind != ProbeKind::time_modulated) {
    out << "tp=" << time_profile_name(time_profile);
    if (time_profile == TimeProfile::oscillating) out << ':' << omega;
    out << ';';
  }
  out << "seed=" << seed;
  if (normalize) out << ";unit";
  out << ')';
  return out.str();
}

SpaceTimeField generate_probe(const ProbeSpec &spec, const TorusGrid &grid,
                              const FilterBank &bank, int steps, double t_final,
                              const std::optional<TLIndex> &norm_index) {
  if (!(bank.grid == grid))
    throw std::invalid_argument("generate_probe: bank built for a different grid");
  GaussianSampler rng(detail::splitmix64(spec.seed ^ 0x5bd1e995u));
  const int j_max = bank.j_max;

  SpaceTimeField field(grid, t_final, steps);

  if (spec.kind == ProbeKind::time_modulated) {
    // independent oscillation per band; a genuinely space-time input
    std::vector<RealField> band_parts;
    std::vector<double> omegas, phases;
    for (int j = 1; j <= j_max - 1; ++j) {
      band_parts.push_back(inverse_transform(draw_band_noise(grid, rng, bank.band(j))));
      omegas.push_back(1.0 + static_cast<double>(rng.raw() % static_cast<std::uint64_t>(
                                 std::max(2, steps / 8))));
      phases.push_back(two_pi * rng.uniform01());
    }
    for (int n = 0; n <= steps; ++n) {
      double t = field.frame_time(n);
      auto &frame = field.frames[static_cast<std::size_t>(n)];
      for (std::size_t b = 0; b < band_parts.size(); ++b) {
        double cn = std::cos(two_pi * omegas[b] * t / t_final + phases[b]);
        for (std::size_t i = 0; i < frame.values.size(); ++i)
          frame.values[i] += cn * band_parts[b].values[i];
      }
    }
  } else {
    RealField spatial(grid);
    double omega = spec.omega;
    switch (spec.kind) {
      case ProbeKind::single_mode: {
        auto mode = spec.mode;
        if (mode[0] == 0 && mode[1] == 0)
          mode[0] = 1 << (1 + static_cast<int>(spec.seed % static_cast<std::uint64_t>(j_max)));
        if (grid.freq_radius(grid.index_of_freq(mode[0], mode[1])) > std::ldexp(1.0, j_max))
          throw std::invalid_argument("generate_probe: mode outside |xi| <= 2^j_max");
        spatial = make_character(grid, mode[0], mode[1]);
        break;
      }
      case ProbeKind::single_band: {
        int j = spec.band_j;
        if (j == 0) j = 1 + static_cast<int>(spec.seed % static_cast<std::uint64_t>(j_max - 1));
        if (j < 1 || j > j_max - 1)
          throw std::invalid_argument("generate_probe: band must lie in [1, j_max - 1]");
        spatial = inverse_transform(draw_band_noise(grid, rng, bank.band(j)));
        break;
      }
      case ProbeKind::lacunary: {
        SpectralField spec_field(grid);
        for (int j = 1; j <= j_max; ++j)
          spec_field.coeffs[grid.index_of_freq(1 << j, 0)] = 1.0;
        spatial = inverse_transform(spec_field);
        break;
      }
      case ProbeKind::white_noise: {
        std::vector<double> window(grid.total_points(), 0.0);
        double cutoff = std::ldexp(1.0, j_max);
        for (std::size_t i = 0; i < window.size(); ++i)
          if (grid.freq_radius(i) <= cutoff) window[i] = 1.0;
        spatial = inverse_transform(draw_band_noise(grid, rng, window));
        break;
      }
      case ProbeKind::time_modulated: break; // handled above
    }
    if (spec.time_profile == TimeProfile::oscillating && omega == 0.0)
      omega = 1.0 + static_cast<double>(spec.seed % 8);
    for (int n = 0; n <= steps; ++n) {
      double cn = time_coefficient(spec.time_profile, field.frame_time(n), t_final, omega);
      auto &frame = field.frames[static_cast<std::size_t>(n)];
      for (std::size_t i = 0; i < frame.values.size(); ++i)
        frame.values[i] = cn * spatial.values[i];
    }
  }

  if (spec.normalize) {
    TLIndex idx = norm_index.value_or(TLIndex{});
    double nrm = space_time_tl_norm(field, idx, bank);
    if (nrm < 1e-12)
      throw std::domain_error("generate_probe: degenerate probe, input norm below 1e-12");
    for (auto &frame : field.frames)
      for (auto &v : frame.values) v /= nrm;
  }
  return field;
}

RatioRecord measure_ratio(const SpaceTimeField &f, double alpha, const TLIndex &idx,
                          const FilterBank &bank, const std::string &probe_digest) {
  if (!idx.valid()) throw std::invalid_argument("measure_ratio: invalid (s, p, q) index");
  if (!(alpha > 0.0 && alpha <= 2.0))
    throw std::invalid_argument("measure_ratio: alpha must lie in (0, 2]");

  RatioRecord rec;
  rec.alpha = alpha;
  rec.s = idx.s;
  rec.p = idx.p;
  rec.q = idx.q;
  rec.dim = f.grid.dim;
  rec.n = f.grid.points_per_axis;
  rec.side_length = f.grid.side_length;
  rec.t_final = f.t_final;
  rec.steps = f.steps;
  rec.profile = bank.profile.name();
  rec.probe = probe_digest;
  rec.timestamp = detail::utc_timestamp();

  rec.input_norm = space_time_tl_norm(f, idx, bank);
  if (rec.input_norm < 1e-12)
    throw std::domain_error("measure_ratio: degenerate input, norm below 1e-12");
  SpaceTimeField u = duhamel_apply(f, alpha);
  rec.output_norm = space_time_tl_norm(u, idx.shifted(alpha / idx.p), bank);
  rec.ratio = rec.output_norm / rec.input_norm;
  return rec;
}

double single_mode_ratio_oracle(int j, double alpha, const TLIndex &idx, double t_final,
                                int steps) {
  if (j < 1) throw std::invalid_argument("single_mode_ratio_oracle: j must be >= 1");
  double mu = std::pow(std::ldexp(1.0, j), alpha);
  double dt = t_final / steps;
  detail::KahanSum acc;
  for (int n = 1; n <= steps; ++n) {
    double w = (1.0 - std::exp(-n * dt * mu)) / mu;
    acc.add(std::pow(w, idx.p));
  }
  double output_time = std::pow(dt * acc.value(), 1.0 / idx.p);
  double input_time = std::pow(t_final, 1.0 / idx.p);
  return std::pow(2.0, j * alpha / idx.p) * output_time / input_time;
}

} // namespace fracsmooth
