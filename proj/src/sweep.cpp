#include "fracsmooth/sweep.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "util.hpp"

namespace fracsmooth {

namespace {

struct Task {
  int n = 0;
  double alpha = 0, p = 2, q = 2, s = 0;
  ProbeKind kind = ProbeKind::white_noise;
  int seed_index = 0;
};

// probe identity depends only on the grid and the probe axis, never on the
// analysis cell, so every (alpha, p, q, s) cell sees the same input family
std::uint64_t probe_seed(const SweepConfig &config, int n, ProbeKind kind, int seed_index) {
  std::ostringstream key;
  key << "d=" << config.dim << ";N=" << n << ";L=" << detail::format_double(config.side_length)
      << ";kind=" << probe_kind_name(kind) << ";i=" << seed_index;
  return detail::splitmix64(config.seed_base ^ detail::fnv1a(key.str()));
}

TimeProfile default_time_profile(ProbeKind kind) {
  switch (kind) {
    case ProbeKind::single_mode: return TimeProfile::constant;
    case ProbeKind::single_band: return TimeProfile::oscillating;
    case ProbeKind::lacunary: return TimeProfile::constant;
    case ProbeKind::white_noise: return TimeProfile::step;
    case ProbeKind::time_modulated: return TimeProfile::constant; // unused by this kind
  }
  return TimeProfile::constant;
}

std::vector<double> resolved_qs(const SweepConfig &config, double p) {
  std::vector<double> out;
  for (const auto &token : config.qs) {
    double q = token.follows_p ? p : token.value;
    bool seen = false;
    for (double prev : out) seen = seen || prev == q;
    if (!seen) out.push_back(q);
  }
  return out;
}

} // namespace

SweepConfig default_sweep_config() { return SweepConfig{}; }

SweepResult run_sweep(const SweepConfig &config, int threads) {
  if (threads < 1) threads = 1;
  if (config.schema != 1) throw ConfigError("run_sweep: unsupported schema");

  // filter banks are immutable; build them once per grid size up front
  std::map<int, FilterBank> banks;
  for (int n : config.grid_sizes)
    if (!banks.count(n))
      banks.emplace(n, build_filter_bank(TorusGrid(config.dim, n, config.side_length),
                                         BumpProfile(config.profile)));

  std::vector<Task> tasks;
  for (int n : config.grid_sizes)
    for (double alpha : config.alphas)
      for (double p : config.ps)
        for (double q : resolved_qs(config, p))
          for (double s : config.ss)
            for (ProbeKind kind : config.probe_kinds)
              for (int i = 0; i < config.seeds; ++i)
                tasks.push_back({n, alpha, p, q, s, kind, i});

  const std::string run_stamp = detail::utc_timestamp();
  std::vector<std::optional<RatioRecord>> slots(tasks.size());
  std::vector<std::string> failure_slots(tasks.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task &task = tasks[i];
      const FilterBank &bank = banks.at(task.n);
      ProbeSpec spec;
      spec.kind = task.kind;
      spec.time_profile = default_time_profile(task.kind);
      spec.seed = probe_seed(config, task.n, task.kind, task.seed_index);
      try {
        SpaceTimeField probe =
            generate_probe(spec, bank.grid, bank, config.steps, config.t_final);
        RatioRecord rec = measure_ratio(probe, task.alpha, {task.s, task.p, task.q}, bank,
                                        spec.digest());
        rec.timestamp = run_stamp;
        slots[i] = std::move(rec);
      } catch (const std::exception &e) {
        std::ostringstream cell;
        cell << "N=" << task.n << " alpha=" << task.alpha << " p=" << task.p
             << " q=" << task.q << " s=" << task.s << " probe=" << spec.digest();
        failure_slots[i] = cell.str() + ": " + e.what();
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
  }

  SweepResult result;
  result.records.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (slots[i])
      result.records.push_back(std::move(*slots[i]));
    else if (!failure_slots[i].empty())
      result.failures.push_back(failure_slots[i]);
  }
  summarize_records(result);
  return result;
}

void summarize_records(SweepResult &result) {
  result.cells.clear();
  result.growth.clear();
  using Key = std::tuple<double, double, double, double, int>; // alpha,p,q,s,N
  std::map<Key, CellSummary> cells;
  for (const auto &rec : result.records) {
    Key key{rec.alpha, rec.p, rec.q, rec.s, rec.n};
    auto &cell = cells[key];
    if (cell.count == 0) {
      cell.alpha = rec.alpha;
      cell.p = rec.p;
      cell.q = rec.q;
      cell.s = rec.s;
      cell.n = rec.n;
      cell.inside_hypothesis = TLIndex{rec.s, rec.p, rec.q}.inside_hypothesis();
    }
    ++cell.count;
    cell.max_ratio = std::max(cell.max_ratio, rec.ratio);
    cell.mean_ratio += rec.ratio;
  }
  for (auto &[key, cell] : cells) {
    cell.mean_ratio /= cell.count;
    result.cells.push_back(cell);
  }

  using GroupKey = std::tuple<double, double, double, double>;
  std::map<GroupKey, std::map<int, double>> groups;
  for (const auto &cell : result.cells)
    groups[{cell.alpha, cell.p, cell.q, cell.s}][cell.n] = cell.max_ratio;
  for (const auto &[key, by_n] : groups) {
    auto it = by_n.begin();
    for (auto next_it = std::next(it); next_it != by_n.end(); ++it, ++next_it) {
      GrowthRow row;
      std::tie(row.alpha, row.p, row.q, row.s) = key;
      row.n_from = it->first;
      row.n_to = next_it->first;
      row.max_from = it->second;
      row.max_to = next_it->second;
      row.growth = row.max_from > 0.0 ? row.max_to / row.max_from - 1.0 : 0.0;
      result.growth.push_back(row);
    }
  }
}

void write_records_csv(std::ostream &out, const std::vector<RatioRecord> &records) {
  out << "alpha,s,p,q,dim,N,L,T,M,profile,probe,input_norm,output_norm,ratio,timestamp\n";
  for (const auto &r : records) {
    out << detail::format_double(r.alpha) << ',' << detail::format_double(r.s) << ','
        << detail::format_double(r.p) << ',' << detail::format_double(r.q) << ',' << r.dim
        << ',' << r.n << ',' << detail::format_double(r.side_length) << ','
        << detail::format_double(r.t_final) << ',' << r.steps << ',' << r.profile << ','
        << r.probe << ',' << detail::format_double(r.input_norm) << ','
        << detail::format_double(r.output_norm) << ',' << detail::format_double(r.ratio)
        << ',' << r.timestamp << '\n';
  }
}

std::vector<RatioRecord> read_records_csv(std::istream &in) {
  std::string line;
  if (!std::getline(in, line) ||
      line.rfind("alpha,s,p,q,dim,N,L,T,M,profile,probe,input_norm", 0) != 0)
    throw std::runtime_error("read_records_csv: missing or unexpected header");
  std::vector<RatioRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, ',')) cols.push_back(col);
    if (cols.size() < 14)
      throw std::runtime_error("read_records_csv: short row at line " + std::to_string(line_no));
    RatioRecord r;
    r.alpha = std::stod(cols[0]);
    r.s = std::stod(cols[1]);
    r.p = std::stod(cols[2]);
    r.q = std::stod(cols[3]);
    r.dim = std::stoi(cols[4]);
    r.n = std::stoi(cols[5]);
    r.side_length = std::stod(cols[6]);
    r.t_final = std::stod(cols[7]);
    r.steps = std::stoi(cols[8]);
    r.profile = cols[9];
    r.probe = cols[10];
    r.input_norm = std::stod(cols[11]);
    r.output_norm = std::stod(cols[12]);
    r.ratio = std::stod(cols[13]);
    if (cols.size() > 14) r.timestamp = cols[14];
    records.push_back(std::move(r));
  }
  return records;
}

std::string summary_json(const SweepResult &result, const SweepConfig *config) {
  nlohmann::json j;
  j["schema"] = 1;
  if (config) j["config"] = sweep_config_text(*config);
  j["record_count"] = result.records.size();
  j["failure_count"] = result.failures.size();
  j["failures"] = result.failures;
  auto &cells = j["cells"] = nlohmann::json::array();
  for (const auto &cell : result.cells) {
    cells.push_back({{"alpha", cell.alpha},
                     {"p", cell.p},
                     {"q", cell.q},
                     {"s", cell.s},
                     {"N", cell.n},
                     {"inside_hypothesis", cell.inside_hypothesis},
                     {"count", cell.count},
                     {"max_ratio", cell.max_ratio},
                     {"mean_ratio", cell.mean_ratio}});
  }
  auto &growth = j["growth"] = nlohmann::json::array();
  double worst_inside = 0.0;
  for (const auto &row : result.growth) {
    growth.push_back({{"alpha", row.alpha},
                      {"p", row.p},
                      {"q", row.q},
                      {"s", row.s},
                      {"N_from", row.n_from},
                      {"N_to", row.n_to},
                      {"max_from", row.max_from},
                      {"max_to", row.max_to},
                      {"growth", row.growth}});
    if (TLIndex{row.s, row.p, row.q}.inside_hypothesis())
      worst_inside = std::max(worst_inside, row.growth);
  }
  j["max_growth_inside_hypothesis"] = worst_inside;
  return j.dump(2) + "\n";
}

std::string ratio_vs_n_table(const SweepResult &result) {
  std::ostringstream out;
  using GroupKey = std::tuple<double, double, double, double>;
  std::map<GroupKey, std::map<int, double>> groups;
  for (const auto &cell : result.cells)
    groups[{cell.alpha, cell.p, cell.q, cell.s}][cell.n] = cell.max_ratio;
  for (const auto &[key, by_n] : groups) {
    out << "# alpha=" << detail::format_double(std::get<0>(key))
        << " p=" << detail::format_double(std::get<1>(key))
        << " q=" << detail::format_double(std::get<2>(key))
        << " s=" << detail::format_double(std::get<3>(key)) << "\n";
    for (const auto &[n, ratio] : by_n)
      out << n << ' ' << detail::format_double(ratio) << '\n';
    out << '\n';
  }
  return out.str();
}

} // namespace fracsmooth
