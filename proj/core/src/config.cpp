#include "ptwalk/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>

namespace ptwalk {

namespace {

struct Entry {
  std::string value;
  std::string source;  // "line N" or "flag --key"
};

const std::set<std::string, std::less<>> kKnownKeys = {
    "command",     "alpha",      "alpha_start", "alpha_stop", "alpha_count",
    "beta",        "beta_start", "beta_stop",   "beta_count", "t",
    "l1",          "l2",         "num_k",       "coin",       "out",
    "plot",        "plot_quantity"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void bad_value(const std::string& key, const Entry& entry,
                            const std::string& expected) {
  throw ConfigError("config " + entry.source + ": value '" + entry.value +
                    "' for key '" + key + "' is not " + expected);
}

double parse_double(const std::string& key, const Entry& entry) {
  const std::string_view v = trim(entry.value);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    bad_value(key, entry, "a number");
  }
  return out;
}

int parse_int(const std::string& key, const Entry& entry) {
  const std::string_view v = trim(entry.value);
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    bad_value(key, entry, "an integer");
  }
  return out;
}

std::vector<std::string> split_list(std::string_view v) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = v.find(',', start);
    parts.emplace_back(trim(v.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::vector<double> parse_double_list(const std::string& key, const Entry& entry) {
  std::vector<double> out;
  for (const std::string& part : split_list(entry.value)) {
    Entry piece{part, entry.source};
    out.push_back(parse_double(key, piece));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& key, const Entry& entry) {
  std::vector<int> out;
  for (const std::string& part : split_list(entry.value)) {
    Entry piece{part, entry.source};
    out.push_back(parse_int(key, piece));
  }
  return out;
}

bool parse_bool(const std::string& key, const Entry& entry) {
  const std::string_view v = trim(entry.value);
  if (v == "true") return true;
  if (v == "false") return false;
  bad_value(key, entry, "'true' or 'false'");
}

Command parse_command(const Entry& entry) {
  const std::string_view v = trim(entry.value);
  if (v == "evolve") return Command::evolve;
  if (v == "sweep") return Command::sweep;
  if (v == "phase-diagram") return Command::phase_diagram;
  if (v == "winding") return Command::winding;
  if (v == "pt-scan") return Command::pt_scan;
  bad_value("command", entry,
            "one of evolve, sweep, phase-diagram, winding, pt-scan");
}

Coin parse_coin(const Entry& entry) {
  const std::string_view v = trim(entry.value);
  if (v == "up") return Coin::up;
  if (v == "down") return Coin::down;
  bad_value("coin", entry, "'up' or 'down'");
}

PlotQuantity parse_plot_quantity(const Entry& entry) {
  const std::string_view v = trim(entry.value);
  if (v == "D") return PlotQuantity::diffusion;
  if (v == "S") return PlotQuantity::entropy;
  bad_value("plot_quantity", entry, "'D' or 'S'");
}

std::string fmt_full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

const char* to_string(Command c) {
  switch (c) {
    case Command::evolve: return "evolve";
    case Command::sweep: return "sweep";
    case Command::phase_diagram: return "phase-diagram";
    case Command::winding: return "winding";
    case Command::pt_scan: return "pt-scan";
  }
  return "sweep";
}

const char* to_string(PlotQuantity q) {
  return q == PlotQuantity::diffusion ? "D" : "S";
}

SweepSpec RunConfig::sweep_spec() const {
  SweepSpec spec;
  spec.alpha = alpha_grid;
  spec.beta_values_pi = beta_values_pi;
  spec.t_values = t_values;
  spec.l1 = l1;
  spec.l2 = l2;
  spec.num_k = num_k;
  spec.initial_coin = initial_coin;
  return spec;
}

RunConfig parse_config(std::string_view file_contents,
                       std::span<const KeyValue> overrides) {
  std::map<std::string, Entry, std::less<>> entries;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= file_contents.size()) {
    const std::size_t eol = file_contents.find('\n', pos);
    std::string_view line = file_contents.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? file_contents.size() + 1 : eol + 1;
    ++line_no;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected 'key = value', got '" + std::string(line) +
                        "'");
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string value{trim(line.substr(eq + 1))};
    if (!kKnownKeys.contains(key)) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
    }
    entries[key] = Entry{value, "line " + std::to_string(line_no)};
  }

  for (const KeyValue& kv : overrides) {
    if (!kKnownKeys.contains(kv.key)) {
      throw ConfigError("flag --" + kv.key + ": unknown key");
    }
    entries[kv.key] = Entry{kv.value, "flag --" + kv.key};
  }

  const auto find = [&](std::string_view key) -> const Entry* {
    const auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };

  RunConfig config;
  const Entry* command_entry = find("command");
  if (!command_entry) {
    throw ConfigError("missing required key 'command'");
  }
  config.command = parse_command(*command_entry);

  // Key relevance per command; anything else present is an error.
  const bool single_point = config.command == Command::evolve ||
                            config.command == Command::winding;
  std::set<std::string, std::less<>> allowed = {"command", "out", "plot", "num_k"};
  switch (config.command) {
    case Command::evolve:
      allowed.insert({"alpha", "beta", "t", "l1", "l2", "coin"});
      break;
    case Command::winding:
      allowed.insert({"alpha", "beta"});
      break;
    case Command::sweep:
      allowed.insert({"alpha_start", "alpha_stop", "alpha_count", "beta", "t",
                      "l1", "l2", "coin", "plot_quantity"});
      break;
    case Command::pt_scan:
      allowed.insert({"alpha_start", "alpha_stop", "alpha_count", "beta", "l1",
                      "l2"});
      break;
    case Command::phase_diagram:
      allowed.insert({"alpha_start", "alpha_stop", "alpha_count", "beta_start",
                      "beta_stop", "beta_count"});
      break;
  }
  for (const auto& [key, entry] : entries) {
    if (!allowed.contains(key)) {
      throw ConfigError("config " + entry.source + ": key '" + key +
                        "' is not used by command '" +
                        to_string(config.command) + "'");
    }
  }

  if (single_point) {
    const Entry* alpha = find("alpha");
    if (!alpha) {
      throw ConfigError(std::string("command '") + to_string(config.command) +
                        "' requires key 'alpha'");
    }
    config.alpha_pi = wrap_pi_units(parse_double("alpha", *alpha));
  }

  if (const Entry* e = find("beta")) {
    config.beta_values_pi.clear();
    for (double b : parse_double_list("beta", *e)) {
      config.beta_values_pi.push_back(wrap_pi_units(b));
    }
    if (config.beta_values_pi.empty()) bad_value("beta", *e, "a number list");
    std::sort(config.beta_values_pi.begin(), config.beta_values_pi.end());
    config.beta_values_pi.erase(std::unique(config.beta_values_pi.begin(),
                                            config.beta_values_pi.end()),
                                config.beta_values_pi.end());
    if (single_point && config.beta_values_pi.size() != 1) {
      throw ConfigError("config " + e->source + ": command '" +
                        to_string(config.command) +
                        "' takes a single beta value");
    }
  }

  const auto parse_grid = [&](const char* prefix, GridSpec grid) {
    const std::string start_key = std::string(prefix) + "_start";
    const std::string stop_key = std::string(prefix) + "_stop";
    const std::string count_key = std::string(prefix) + "_count";
    if (const Entry* e = find(start_key)) grid.start_pi = parse_double(start_key, *e);
    if (const Entry* e = find(stop_key)) grid.stop_pi = parse_double(stop_key, *e);
    if (const Entry* e = find(count_key)) grid.count = parse_int(count_key, *e);
    if (!(grid.start_pi >= -1.0 && grid.start_pi < grid.stop_pi &&
          grid.stop_pi <= 1.0)) {
      throw ConfigError(std::string(prefix) +
                        " grid must satisfy -1 <= start < stop <= 1 (in pi units)");
    }
    if (grid.count < 2) {
      throw ConfigError(std::string(prefix) + "_count must be >= 2");
    }
    return grid;
  };
  if (!single_point) {
    const int default_count = config.command == Command::phase_diagram ? 64 : 201;
    config.alpha_grid = parse_grid("alpha", GridSpec{-1.0, 1.0, default_count});
  }
  if (config.command == Command::phase_diagram) {
    config.beta_grid = parse_grid("beta", GridSpec{-1.0, 1.0, 64});
  }

  if (const Entry* e = find("t")) {
    config.t_values = parse_int_list("t", *e);
    std::sort(config.t_values.begin(), config.t_values.end());
    config.t_values.erase(
        std::unique(config.t_values.begin(), config.t_values.end()),
        config.t_values.end());
    for (int t : config.t_values) {
      if (t < 1) bad_value("t", *e, "a positive step count");
    }
    if (config.command == Command::evolve && config.t_values.size() != 1) {
      throw ConfigError("config " + e->source +
                        ": command 'evolve' takes a single t value");
    }
  }

  if (const Entry* e = find("l1")) config.l1 = parse_double("l1", *e);
  if (const Entry* e = find("l2")) config.l2 = parse_double("l2", *e);
  if (!(config.l1 >= 0.0 && config.l1 <= 1.0 && config.l2 >= 0.0 &&
        config.l2 <= 1.0)) {
    throw ConfigError("l1 and l2 must lie in [0, 1]");
  }

  if (const Entry* e = find("num_k")) {
    config.num_k = parse_int("num_k", *e);
    if (config.num_k < 2) bad_value("num_k", *e, "an integer >= 2");
  }
  if (const Entry* e = find("coin")) config.initial_coin = parse_coin(*e);
  if (const Entry* e = find("plot")) config.plot = parse_bool("plot", *e);
  if (const Entry* e = find("plot_quantity")) {
    config.plot_quantity = parse_plot_quantity(*e);
  }

  if (const Entry* e = find("out")) {
    config.out = trim(e->value);
    if (config.out.empty()) bad_value("out", *e, "a non-empty path");
  } else {
    config.out = std::string(to_string(config.command)) + ".csv";
  }

  if (config.plot && (config.command == Command::evolve ||
                      config.command == Command::winding ||
                      config.command == Command::pt_scan)) {
    throw ConfigError(std::string("command '") + to_string(config.command) +
                      "' produces no observable-vs-alpha series to plot");
  }

  return config;
}

std::string render_config(const RunConfig& config) {
  std::string out;
  const auto add = [&](const std::string& key, const std::string& value) {
    out += key + " = " + value + "\n";
  };
  add("command", to_string(config.command));

  const bool single_point =
      config.command == Command::evolve || config.command == Command::winding;
  if (single_point) {
    add("alpha", fmt_full(config.alpha_pi));
  } else {
    add("alpha_start", fmt_full(config.alpha_grid.start_pi));
    add("alpha_stop", fmt_full(config.alpha_grid.stop_pi));
    add("alpha_count", std::to_string(config.alpha_grid.count));
  }
  if (config.command == Command::phase_diagram) {
    add("beta_start", fmt_full(config.beta_grid.start_pi));
    add("beta_stop", fmt_full(config.beta_grid.stop_pi));
    add("beta_count", std::to_string(config.beta_grid.count));
  } else {
    std::string betas;
    for (std::size_t i = 0; i < config.beta_values_pi.size(); ++i) {
      if (i) betas += ",";
      betas += fmt_full(config.beta_values_pi[i]);
    }
    add("beta", betas);
  }
  if (config.command == Command::evolve || config.command == Command::sweep) {
    std::string ts;
    for (std::size_t i = 0; i < config.t_values.size(); ++i) {
      if (i) ts += ",";
      ts += std::to_string(config.t_values[i]);
    }
    add("t", ts);
    add("l1", fmt_full(config.l1));
    add("l2", fmt_full(config.l2));
    add("coin", config.initial_coin == Coin::up ? "up" : "down");
  } else if (config.command == Command::pt_scan) {
    add("l1", fmt_full(config.l1));
    add("l2", fmt_full(config.l2));
  }
  add("num_k", std::to_string(config.num_k));
  add("out", config.out);
  add("plot", config.plot ? "true" : "false");
  if (config.command == Command::sweep) {
    add("plot_quantity", to_string(config.plot_quantity));
  }
  return out;
}

}  // namespace ptwalk
