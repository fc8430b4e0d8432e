#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "swarmpath/simulator.hpp"

namespace swarmpath {

/// Sum of frame-to-frame displacements of one drone.
double path_length(const SimulationTrace &trace, std::size_t drone);

/// Largest separation of drones i and j over all frames; i != j.
double max_pairwise_distance(const SimulationTrace &trace, std::size_t i, std::size_t j);

/// t of the first frame satisfying the completion predicate, if the run completed.
std::optional<double> completion_time(const SimulationTrace &trace);

/// Mean per-stamp position error of `drone` between two traces, as a
/// percentage of the reference (`reference`) path length. The shorter trace
/// holds its final frame for the remaining stamps of the longer one.
/// Throws DomainError on mismatched dt or a zero-length reference.
double ape(const SimulationTrace &trace, const SimulationTrace &reference, std::size_t drone);

/// Square matrix indexed [i][j]; the diagonal is zero.
using PairMatrix = std::vector<std::vector<double>>;

struct RunMetrics {
  Controller controller = Controller::kSwarmPath;
  Outcome outcome = Outcome::kMaxSteps;
  std::optional<double> completion_time;
  std::size_t frame_count = 0;
  std::vector<double> path_length;
  PairMatrix max_distance;
};

struct Comparison {
  /// swarmpath completion time / conventional-apf completion time.
  double time_ratio = 1.0;
  /// swarmpath max pairwise distance / conventional-apf, per pair.
  PairMatrix distance_ratio;
};

struct MetricsReport {
  std::vector<RunMetrics> runs;
  /// Present only when every compared run completed.
  std::optional<Comparison> comparison;
  /// Per-drone path-length-normalized APE, when a reference trace was given.
  std::optional<std::vector<double>> ape;
};

RunMetrics run_metrics(const SimulationTrace &trace);

/// Metrics of a single run.
MetricsReport report(const SimulationTrace &trace);

/// Both runs plus their ratios. Throws ValidationError if the traces were
/// produced from different scenarios.
MetricsReport compare(const SimulationTrace &swarmpath, const SimulationTrace &baseline);

}  // namespace swarmpath
