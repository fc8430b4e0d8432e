#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "swarmpath/metrics.hpp"
#include "swarmpath/simulator.hpp"

namespace swarmpath {

/// Comma-separated trace, one row per frame.
///
/// Leading columns: t, leader_x, leader_y, then drone<i>_x, drone<i>_y,
/// drone<i>_mode for i = 1..N (mode is L, O<k>, or - for the conventional
/// comparator, whose leader cells are empty). Trailing state columns make the
/// file a lossless record of the run: leader_status, then per drone
/// drone<i>_status, drone<i>_dx, drone<i>_dy, drone<i>_vx, drone<i>_vy,
/// drone<i>_vbar. Status is R (goal reached), S (stalled this step) or -.
/// Numbers use the shortest representation that parses back exactly.
std::string write_trace_csv(const SimulationTrace &trace);

/// Rebuilds a trace written by write_trace_csv; `spec` must be the scenario
/// it was produced from. The outcome is re-derived with the simulator's rules.
SimulationTrace read_trace_csv(std::string_view text, const ScenarioSpec &spec);

/// JSON report with fixed key order and values rounded to 6 significant digits.
std::string write_report_json(const MetricsReport &report);

/// Self-contained SVG: obstacle bodies, r_apf (blue) and r_imp (green)
/// circles, leader path, one polyline per drone. Obstacle-linked stretches of
/// SwarmPath traces are overdrawn; conventional-APF traces are dashed.
std::string render_svg(const ScenarioSpec &spec, std::span<const SimulationTrace *const> traces);
std::string render_svg(const SimulationTrace &trace);

/// Writes `contents` to `path`, throwing Error on failure.
void write_text_file(const std::filesystem::path &path, std::string_view contents);

/// Rounds to 6 significant digits.
double round_significant(double value);

}  // namespace swarmpath
