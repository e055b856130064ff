// ptwalk command-line front end: reads an optional `key = value` config file,
// applies flag overrides, runs the requested command, and emits CSV (and
// optionally an SVG plot next to it).
//
// Exit codes: 0 success, 2 config error, 3 numerical failure, 4 I/O error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ptwalk/config.hpp"
#include "ptwalk/csv.hpp"
#include "ptwalk/plot.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ptwalk::IoError("cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::filesystem::path plot_path_for(const std::filesystem::path& out) {
  std::filesystem::path p = out;
  p.replace_extension(".svg");
  return p;
}

int run(int argc, char** argv) {
  CLI::App app{"ptwalk: 1D split-step quantum walk simulator"};
  app.footer(
      "Angles are in units of pi (0.25 means pi/4). Flags override config\n"
      "file keys of the same name.");

  std::string config_path;
  app.add_option("config", config_path, "config file (key = value lines)");

  // Flag values arrive as raw strings and flow through the same validation
  // as file keys.
  std::vector<std::pair<std::string, std::string>> flag_specs = {
      {"command", "evolve | sweep | phase-diagram | winding | pt-scan"},
      {"alpha", "walk angle alpha in pi units (evolve, winding)"},
      {"beta", "walk angle beta in pi units; comma list for sweep/pt-scan"},
      {"t", "step count; comma list for sweep"},
      {"l1", "loss amplitude l1 in [0, 1]"},
      {"l2", "loss amplitude l2 in [0, 1]"},
      {"num-k", "momentum grid size"},
      {"coin", "initial coin: up | down"},
      {"out", "output CSV path"},
      {"alpha-start", "alpha grid start in pi units"},
      {"alpha-stop", "alpha grid stop in pi units (exclusive)"},
      {"alpha-count", "alpha grid point count"},
      {"beta-start", "beta grid start (phase-diagram)"},
      {"beta-stop", "beta grid stop (phase-diagram)"},
      {"beta-count", "beta grid point count (phase-diagram)"},
      {"plot-quantity", "plotted observable: D | S"},
  };
  std::vector<std::string> flag_values(flag_specs.size());
  std::vector<CLI::Option*> flag_options;
  for (std::size_t i = 0; i < flag_specs.size(); ++i) {
    flag_options.push_back(app.add_option("--" + flag_specs[i].first,
                                          flag_values[i],
                                          flag_specs[i].second));
  }
  bool plot = false;
  CLI::Option* plot_flag = app.add_flag("--plot", plot, "emit an SVG plot next to the CSV");

  CLI11_PARSE(app, argc, argv);

  std::vector<ptwalk::KeyValue> overrides;
  for (std::size_t i = 0; i < flag_specs.size(); ++i) {
    if (flag_options[i]->count() == 0) continue;
    std::string key = flag_specs[i].first;
    for (char& c : key) {
      if (c == '-') c = '_';
    }
    overrides.push_back({key, flag_values[i]});
  }
  if (plot_flag->count() > 0) overrides.push_back({"plot", "true"});

  const std::string contents = config_path.empty() ? "" : read_file(config_path);
  const ptwalk::RunConfig config = ptwalk::parse_config(contents, overrides);
  const std::filesystem::path out_path(config.out);
  if (config.plot && plot_path_for(out_path) == out_path) {
    throw ptwalk::ConfigError("out path '" + config.out +
                              "' collides with the plot path; use a non-.svg "
                              "extension");
  }

  ptwalk::SweepResult table;
  std::size_t plotted = 0;
  switch (config.command) {
    case ptwalk::Command::sweep: {
      table = ptwalk::run_sweep(config.sweep_spec());
      break;
    }
    case ptwalk::Command::pt_scan: {
      table = ptwalk::run_pt_scan(config.sweep_spec());
      break;
    }
    case ptwalk::Command::evolve: {
      table = ptwalk::run_evolve(config.alpha_pi, config.beta_values_pi.front(),
                                 config.l1, config.l2, config.t_values.front(),
                                 config.initial_coin, config.num_k);
      break;
    }
    case ptwalk::Command::winding: {
      const ptwalk::WindingRun run = ptwalk::run_winding(
          config.alpha_pi, config.beta_values_pi.front(), config.num_k);
      table = run.table;
      std::printf("W = %d (raw integral %.9f, residual %.3e, num_k %d)\n",
                  run.result.value, run.result.raw_integral,
                  run.result.residual, run.result.num_k_used);
      break;
    }
    case ptwalk::Command::phase_diagram: {
      const ptwalk::PhaseDiagramResult diagram = ptwalk::run_phase_diagram(
          config.alpha_grid, config.beta_grid, config.num_k);
      table = diagram.table;
      if (config.plot) {
        ptwalk::emit_plot(diagram, plot_path_for(out_path));
        ++plotted;
      }
      break;
    }
  }

  ptwalk::emit_csv(table, out_path);
  if (config.plot && config.command == ptwalk::Command::sweep) {
    ptwalk::emit_plot(table, config.plot_quantity, plot_path_for(out_path));
    ++plotted;
  }

  std::printf("wrote %s (%zu rows)\n", out_path.string().c_str(),
              table.rows.size());
  if (plotted > 0) {
    std::printf("wrote %s\n", plot_path_for(out_path).string().c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ptwalk::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ptwalk::NothingToPlot& e) {
    std::cerr << "nothing to plot: " << e.what() << "\n";
    return 2;
  } catch (const ptwalk::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 4;
  } catch (const ptwalk::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
