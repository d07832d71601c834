#include "fveg/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fveg {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& v, int line) {
  if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
  if (v == "off" || v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("expected a boolean, got '" + v + "'", line);
}

double parse_double(const std::string& v, int line) {
  std::size_t pos = 0;
  double r = 0.0;
  try {
    r = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("expected a number, got '" + v + "'", line);
  }
  if (pos != v.size())
    throw ConfigError("trailing characters in number '" + v + "'", line);
  return r;
}

int parse_int(const std::string& v, int line) {
  const double d = parse_double(v, line);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d)
    throw ConfigError("expected an integer, got '" + v + "'", line);
  return i;
}

template <class T, class F>
std::vector<T> parse_list(const std::string& v, int line, F&& one) {
  std::vector<T> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(one(item, line));
  }
  return out;
}

}  // namespace

void apply_config_key(RunConfig& cfg, const std::string& key,
                      const std::string& value, int line) {
  if (key == "scenario")
    cfg.scenario = value;
  else if (key == "nx")
    cfg.nx = parse_int(value, line);
  else if (key == "ny")
    cfg.ny = parse_int(value, line);
  else if (key == "gravity" || key == "g")
    cfg.gravity = parse_double(value, line);
  else if (key == "mu")
    cfg.mu = parse_double(value, line);
  else if (key == "end" || key == "end_time")
    cfg.end_time = parse_double(value, line);
  else if (key == "snapshots" || key == "snapshot_times")
    cfg.snapshot_times = parse_list<double>(value, line, parse_double);
  else if (key == "outdir" || key == "out")
    cfg.outdir = value;
  else if (key == "format")
    cfg.format = value;
  else if (key == "eps_h")
    cfg.eps_h = parse_double(value, line);
  else if (key == "entropy_fix")
    cfg.entropy_fix = parse_bool(value, line);
  else if (key == "order")
    cfg.order = parse_int(value, line);
  else if (key == "grids")
    cfg.grids = parse_list<int>(value, line, parse_int);
  else if (key == "lake_at_rest")
    cfg.lake_at_rest = parse_bool(value, line);
  else if (key == "bc_override" || key == "bc")
    cfg.bc_override = value;
  else if (key == "dam_h_left" || key == "hl")
    cfg.dam_h_left = parse_double(value, line);
  else if (key == "dam_h_right" || key == "hr")
    cfg.dam_h_right = parse_double(value, line);
  else if (key == "dt_min")
    cfg.dt_min = parse_double(value, line);
  else if (key == "dt_all_dry")
    cfg.dt_all_dry = parse_double(value, line);
  else if (key == "parallel")
    cfg.parallel = parse_bool(value, line);
  else if (key == "threads")
    cfg.threads = parse_int(value, line);
  else
    throw ConfigError("unknown key '" + key + "'", line);
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  RunConfig cfg;
  std::string line;
  std::string section;
  int ln = 0;
  // sectioned keys are collected and applied only when the section matches
  std::vector<std::array<std::string, 2>> deferred;
  std::vector<int> deferred_lines;
  std::vector<std::string> deferred_sections;
  while (std::getline(in, line)) {
    ++ln;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("unterminated section header", ln);
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected 'key = value'", ln);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", ln);
    if (section.empty()) {
      apply_config_key(cfg, key, value, ln);
    } else {
      deferred.push_back({key, value});
      deferred_lines.push_back(ln);
      deferred_sections.push_back(section);
    }
  }
  for (std::size_t k = 0; k < deferred.size(); ++k)
    if (deferred_sections[k] == cfg.scenario)
      apply_config_key(cfg, deferred[k][0], deferred[k][1], deferred_lines[k]);
  return cfg;
}

void RunConfig::validate() const {
  if (!(mu > 0.0 && mu < 1.0))
    throw ConfigError("mu must lie in (0, 1), got " + std::to_string(mu));
  if (order != 1 && order != 2)
    throw ConfigError("order must be 1 or 2, got " + std::to_string(order));
  if (eps_h <= 0.0) throw ConfigError("eps_h must be positive");
  if (format != "dat")
    throw ConfigError("unknown output format '" + format + "'");
  if (!bc_override.empty() && bc_override != "open" &&
      bc_override != "periodic" && bc_override != "reflective")
    throw ConfigError("bc_override must be open, periodic or reflective");
  std::vector<double> snaps = snapshot_times;
  if (!std::is_sorted(snaps.begin(), snaps.end()))
    throw ConfigError("snapshot times must be sorted");
  for (double t : snaps)
    if (t < 0.0) throw ConfigError("snapshot times must be nonnegative");
}

}  // namespace fveg
