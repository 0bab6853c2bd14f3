#include "fracsmooth/sweep.hpp"

#include <fstream>
#include <sstream>

#include "util.hpp"

namespace fracsmooth {

namespace {

std::string trim(const std::string &s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

[[noreturn]] void fail(const std::string &name, std::size_t line, const std::string &message) {
  throw ConfigError(name + ":" + std::to_string(line) + ": " + message);
}

double parse_number(const std::string &name, std::size_t line, const std::string &value) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception &) {
    fail(name, line, "expected a number, got '" + value + "'");
  }
}

long parse_integer(const std::string &name, std::size_t line, const std::string &value) {
  double v = parse_number(name, line, value);
  long i = static_cast<long>(v);
  if (static_cast<double>(i) != v) fail(name, line, "expected an integer, got '" + value + "'");
  return i;
}

} // namespace

SweepConfig parse_sweep_config(std::istream &in, const std::string &name) {
  SweepConfig config;
  bool saw_schema = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    std::size_t eq = text.find('=');
    if (eq == std::string::npos) fail(name, line_no, "expected 'key = value'");
    std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    if (value.empty()) fail(name, line_no, "empty value for key '" + key + "'");

    if (key == "schema") {
      if (parse_integer(name, line_no, value) != 1)
        fail(name, line_no, "unsupported schema '" + value + "' (expected 1)");
      saw_schema = true;
    } else if (key == "dim") {
      long d = parse_integer(name, line_no, value);
      if (d != 1 && d != 2) fail(name, line_no, "dim must be 1 or 2");
      config.dim = static_cast<int>(d);
    } else if (key == "L") {
      config.side_length = parse_number(name, line_no, value);
      if (!(config.side_length > 0)) fail(name, line_no, "L must be positive");
    } else if (key == "N") {
      config.grid_sizes.clear();
      for (const auto &item : split_list(value))
        config.grid_sizes.push_back(static_cast<int>(parse_integer(name, line_no, item)));
      if (config.grid_sizes.empty()) fail(name, line_no, "N list is empty");
    } else if (key == "alpha") {
      config.alphas.clear();
      for (const auto &item : split_list(value)) {
        double a = parse_number(name, line_no, item);
        if (!(a > 0 && a <= 2)) fail(name, line_no, "alpha values must lie in (0, 2]");
        config.alphas.push_back(a);
      }
    } else if (key == "p") {
      config.ps.clear();
      for (const auto &item : split_list(value)) {
        double p = parse_number(name, line_no, item);
        if (!(p >= 1)) fail(name, line_no, "p values must be >= 1");
        config.ps.push_back(p);
      }
    } else if (key == "q") {
      config.qs.clear();
      for (const auto &item : split_list(value)) {
        if (item == "p")
          config.qs.push_back({true, 0.0});
        else {
          double q = parse_number(name, line_no, item);
          if (!(q >= 1)) fail(name, line_no, "q values must be >= 1");
          config.qs.push_back({false, q});
        }
      }
    } else if (key == "s") {
      config.ss.clear();
      for (const auto &item : split_list(value))
        config.ss.push_back(parse_number(name, line_no, item));
    } else if (key == "probes") {
      config.probe_kinds.clear();
      for (const auto &item : split_list(value)) {
        try {
          config.probe_kinds.push_back(parse_probe_kind(item));
        } catch (const std::exception &e) {
          fail(name, line_no, e.what());
        }
      }
    } else if (key == "seeds") {
      long n = parse_integer(name, line_no, value);
      if (n < 1) fail(name, line_no, "seeds must be >= 1");
      config.seeds = static_cast<int>(n);
    } else if (key == "seed_base") {
      config.seed_base = static_cast<std::uint64_t>(parse_integer(name, line_no, value));
    } else if (key == "T") {
      config.t_final = parse_number(name, line_no, value);
      if (!(config.t_final > 0)) fail(name, line_no, "T must be positive");
    } else if (key == "steps") {
      long m = parse_integer(name, line_no, value);
      if (m < 1) fail(name, line_no, "steps must be >= 1");
      config.steps = static_cast<int>(m);
    } else if (key == "profile") {
      try {
        config.profile = make_profile(value).kind();
      } catch (const std::exception &e) {
        fail(name, line_no, e.what());
      }
    } else {
      fail(name, line_no, "unknown key '" + key + "'");
    }
  }
  if (!saw_schema) throw ConfigError(name + ": missing required 'schema' key");
  return config;
}

SweepConfig load_sweep_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open sweep config");
  return parse_sweep_config(in, path);
}

std::string sweep_config_text(const SweepConfig &config) {
  std::ostringstream out;
  out << "schema = " << config.schema << "\n";
  out << "dim = " << config.dim << "\n";
  out << "L = " << detail::format_double(config.side_length) << "\n";
  out << "N = ";
  for (std::size_t i = 0; i < config.grid_sizes.size(); ++i)
    out << (i ? "," : "") << config.grid_sizes[i];
  out << "\nalpha = ";
  for (std::size_t i = 0; i < config.alphas.size(); ++i)
    out << (i ? "," : "") << detail::format_double(config.alphas[i]);
  out << "\np = ";
  for (std::size_t i = 0; i < config.ps.size(); ++i)
    out << (i ? "," : "") << detail::format_double(config.ps[i]);
  out << "\nq = ";
  for (std::size_t i = 0; i < config.qs.size(); ++i) {
    out << (i ? "," : "");
    if (config.qs[i].follows_p)
      out << "p";
    else
      out << detail::format_double(config.qs[i].value);
  }
  out << "\ns = ";
  for (std::size_t i = 0; i < config.ss.size(); ++i)
    out << (i ? "," : "") << detail::format_double(config.ss[i]);
  out << "\nprobes = ";
  for (std::size_t i = 0; i < config.probe_kinds.size(); ++i)
    out << (i ? "," : "") << probe_kind_name(config.probe_kinds[i]);
  out << "\nseeds = " << config.seeds << "\n";
  out << "seed_base = " << config.seed_base << "\n";
  out << "T = " << detail::format_double(config.t_final) << "\n";
  out << "steps = " << config.steps << "\n";
  out << "profile = " << BumpProfile(config.profile).name() << "\n";
  return out.str();
}

} // namespace fracsmooth
