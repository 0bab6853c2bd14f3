#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fracsmooth/bump_profile.hpp"
#include "fracsmooth/probes.hpp"

namespace fracsmooth {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cross-product sweep description.  The q axis may contain the literal
// token "p" (q tracks p in that cell family).
struct SweepConfig {
  int schema = 1;
  int dim = 1;
  double side_length = 1.0;
  std::vector<int> grid_sizes{64, 128, 256};
  std::vector<double> alphas{0.5, 1.0, 1.5, 2.0};
  std::vector<double> ps{2.0, 4.0};
  struct QToken {
    bool follows_p = false;
    double value = 2.0;
  };
  std::vector<QToken> qs{{false, 2.0}, {true, 0.0}};
  std::vector<double> ss{0.0, 1.0};
  std::vector<ProbeKind> probe_kinds{ProbeKind::single_mode, ProbeKind::single_band,
                                     ProbeKind::lacunary, ProbeKind::white_noise,
                                     ProbeKind::time_modulated};
  int seeds = 8;
  std::uint64_t seed_base = 0;
  double t_final = 1.0;
  int steps = 256;
  ProfileKind profile = ProfileKind::smooth_exponential;
};

// The desk-scale default documented in the README (also what an absent
// config file means for the sweep subcommand).
SweepConfig default_sweep_config();

// key = value format, one per line, '#' comments, versioned by "schema".
// Unknown keys and malformed values raise ConfigError with file:line.
SweepConfig parse_sweep_config(std::istream &in, const std::string &name);
SweepConfig load_sweep_config(const std::string &path);
std::string sweep_config_text(const SweepConfig &config); // canonical echo

struct CellSummary {
  double alpha = 0, p = 2, q = 2, s = 0;
  int n = 0;
  bool inside_hypothesis = false;
  int count = 0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
};

struct GrowthRow {
  double alpha = 0, p = 2, q = 2, s = 0;
  int n_from = 0, n_to = 0;
  double max_from = 0.0, max_to = 0.0;
  double growth = 0.0; // max_to / max_from - 1
};

struct SweepResult {
  std::vector<RatioRecord> records;
  std::vector<std::string> failures; // "cell: message" entries
  std::vector<CellSummary> cells;
  std::vector<GrowthRow> growth;
};

// Runs every cell of the cross-product on a deterministic task list; the
// numeric output is identical for every thread count >= 1.
SweepResult run_sweep(const SweepConfig &config, int threads = 1);

// fixed column order; timestamp is the last column so byte comparisons can
// strip it
void write_records_csv(std::ostream &out, const std::vector<RatioRecord> &records);
std::vector<RatioRecord> read_records_csv(std::istream &in);

// recompute cells/growth from records (used by run_sweep and `report`)
void summarize_records(SweepResult &result);

std::string summary_json(const SweepResult &result, const SweepConfig *config);
// gnuplot-style blocks: per-(alpha,p,q,s) "N max_ratio" pairs
std::string ratio_vs_n_table(const SweepResult &result);

} // namespace fracsmooth
