#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "fracsmooth/field.hpp"
#include "fracsmooth/filter_bank.hpp"
#include "fracsmooth/function_spaces.hpp"

namespace fracsmooth {

enum class ProbeKind { single_mode, single_band, lacunary, white_noise, time_modulated };
enum class TimeProfile { constant, step, oscillating };

const char *probe_kind_name(ProbeKind kind);
ProbeKind parse_probe_kind(std::string_view name);

// Deterministic description of one test function.  Unset placement fields
// (band 0, mode (0,0), omega 0) are derived from the seed, so the seed fully
// determines the probe on a given grid and profile.
struct ProbeSpec {
  ProbeKind kind = ProbeKind::white_noise;
  int band_j = 0;                 // single_band target band
  std::array<int, 2> mode{0, 0};  // single_mode lattice frequency
  TimeProfile time_profile = TimeProfile::constant;
  double omega = 0.0;             // oscillating cycles over [0, T]
  std::uint64_t seed = 0;
  bool normalize = false;

  std::string digest() const; // canonical comma-free description
};

// Builds the space-time test function.  norm_index supplies the (s, p, q)
// used when spec.normalize asks for unit input norm.
SpaceTimeField generate_probe(const ProbeSpec &spec, const TorusGrid &grid,
                              const FilterBank &bank, int steps, double t_final,
                              const std::optional<TLIndex> &norm_index = {});

// One measurement of the smoothing ratio with full parameter provenance.
struct RatioRecord {
  double alpha = 0.0;
  double s = 0.0, p = 2.0, q = 2.0;
  int dim = 1, n = 0;
  double side_length = 1.0;
  double t_final = 1.0;
  int steps = 1;
  std::string profile;
  std::string probe;
  double input_norm = 0.0;
  double output_norm = 0.0;
  double ratio = 0.0;
  std::string timestamp;
};

// Applies the Duhamel map and compares the output norm at the shifted
// smoothness s + alpha/p against the input norm at s.  Inputs with norm
// below 1e-12 are rejected as degenerate (std::domain_error).
RatioRecord measure_ratio(const SpaceTimeField &f, double alpha, const TLIndex &idx,
                          const FilterBank &bank, const std::string &probe_digest = "");

// Closed-form scalar route for a unit single mode at |k| = 2^j with the
// constant time profile: no fields, filters, or transforms involved.
double single_mode_ratio_oracle(int j, double alpha, const TLIndex &idx, double t_final,
                                int steps);

} // namespace fracsmooth
