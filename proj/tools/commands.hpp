#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swarmpath/simulator.hpp"
#include "swarmpath/world.hpp"

namespace swarmpath::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitIncomplete = 2,
};

/// Overrides applied on top of a loaded scenario.
struct ScenarioOverrides {
  std::optional<double> dt;
  std::optional<std::size_t> max_steps;

  void apply(ScenarioSpec &spec) const;
};

struct RunOptions {
  std::filesystem::path scenario;
  Controller controller = Controller::kSwarmPath;
  std::filesystem::path output_dir;
  ScenarioOverrides overrides;
};

/// Writes trace.csv, metrics.json and trace.svg.
int cmd_run(const RunOptions &options, std::ostream &out, std::ostream &err);

/// Runs both controllers; writes trace_swarmpath.csv, trace_apf.csv,
/// comparison.json and overlay.svg.
int cmd_compare(const std::filesystem::path &scenario, const std::filesystem::path &output_dir,
                const ScenarioOverrides &overrides, std::ostream &out, std::ostream &err);

enum class SweepParameter { kMass, kDamping, kStiffness };

struct SweepSpec {
  SweepParameter parameter = SweepParameter::kDamping;
  std::vector<double> values;
  ImpedanceParams base;
  ScenarioSpec scenario;
};

/// Sweep document: {"parameter": "m"|"d"|"k", "values": [...],
/// "scenario": <path relative to the sweep file, or inline scenario object>,
/// "base": {m, d, k} (optional, defaults to the scenario's impedance)}.
SweepSpec load_sweep(const std::filesystem::path &path);

/// Impedance constants of one sweep row.
ImpedanceParams sweep_point(const SweepSpec &sweep, double value);

/// |d - 2*sqrt(m*k)| within this is reported as critically damped.
inline constexpr double kCriticalDampingTolerance = 0.01;

/// One SwarmPath run per value; writes sweep.json and sweep.csv (drones as
/// rows, parameter values as columns).
int cmd_sweep(const std::filesystem::path &sweep_path, const std::filesystem::path &output_dir, std::ostream &out,
              std::ostream &err);

struct ValidateOptions {
  /// Integrator step; only tests override it.
  double dt = 0.01;
};

/// Integrator-vs-closed-form and potential-field self checks.
int cmd_validate(const ValidateOptions &options, std::ostream &out, std::ostream &err);

/// Per-drone path-length-normalized APE of `trace` against `reference`.
int cmd_ape(const std::filesystem::path &scenario, const std::filesystem::path &trace,
            const std::filesystem::path &reference, std::ostream &out, std::ostream &err);

/// $SWARMPATH_OUT when set, otherwise "out".
std::filesystem::path default_output_dir();

}  // namespace swarmpath::cli
