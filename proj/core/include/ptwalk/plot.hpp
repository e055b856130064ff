#ifndef PTWALK_PLOT_HPP
#define PTWALK_PLOT_HPP

/// Static SVG plots: observable-vs-alpha polylines for sweep results (one
/// polyline per (beta, t) series) and a colored cell grid for phase diagrams.
/// Alpha-axis ticks sit at multiples of pi/4, labeled in pi units.

#include <filesystem>
#include <string>

#include "ptwalk/config.hpp"
#include "ptwalk/scan_engine.hpp"

namespace ptwalk {

/// Render D-or-S vs alpha polylines. Throws NothingToPlot for an empty result
/// or fewer than two distinct alpha values.
std::string render_sweep_plot(const SweepResult& result, PlotQuantity quantity);

/// Render a winding-number heatmap; boundary cells get a distinct color.
std::string render_phase_diagram_plot(const PhaseDiagramResult& diagram);

void emit_plot(const SweepResult& result, PlotQuantity quantity,
               const std::filesystem::path& path);
void emit_plot(const PhaseDiagramResult& diagram,
               const std::filesystem::path& path);

}  // namespace ptwalk

#endif  // PTWALK_PLOT_HPP
