#ifndef PTWALK_CONFIG_HPP
#define PTWALK_CONFIG_HPP

/// Run configuration: a flat `key = value` document plus flag overrides.
///
/// Grammar: one `key = value` per line; `#` starts a comment; blank lines are
/// ignored; later occurrences of a key win. Flag overrides are applied after
/// the file. All angles are given in units of pi ("0.25" means pi/4) and are
/// canonicalized to [-1, 1).

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptwalk/scan_engine.hpp"

namespace ptwalk {

enum class Command { evolve, sweep, phase_diagram, winding, pt_scan };
enum class PlotQuantity { diffusion, entropy };

const char* to_string(Command c);
const char* to_string(PlotQuantity q);

struct RunConfig {
  Command command = Command::sweep;

  // single-point commands (evolve, winding)
  double alpha_pi = 0.0;

  // grid commands (sweep, pt-scan, phase-diagram)
  GridSpec alpha_grid{-1.0, 1.0, 201};
  GridSpec beta_grid{-1.0, 1.0, 64};  // phase-diagram only

  std::vector<double> beta_values_pi{0.25};
  std::vector<int> t_values{15};
  double l1 = 1.0;
  double l2 = 1.0;
  int num_k = 1024;
  Coin initial_coin = Coin::up;
  std::string out;  // defaults to "<command>.csv"
  bool plot = false;
  PlotQuantity plot_quantity = PlotQuantity::diffusion;

  bool operator==(const RunConfig&) const = default;

  SweepSpec sweep_spec() const;
};

struct KeyValue {
  std::string key;
  std::string value;
};

/// Parse and validate a config document plus overrides. Throws ConfigError
/// naming the offending key and line.
RunConfig parse_config(std::string_view file_contents,
                       std::span<const KeyValue> overrides = {});

/// Canonical `key = value` echo of a config; parse_config(render_config(c))
/// reproduces c.
std::string render_config(const RunConfig& config);

}  // namespace ptwalk

#endif  // PTWALK_CONFIG_HPP
