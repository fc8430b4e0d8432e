#include "swarmpath/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swarmpath/errors.hpp"

namespace swarmpath {

namespace {

void check_drone(const SimulationTrace &trace, std::size_t drone) {
  if (drone >= trace.drone_count()) {
    throw DomainError("drone index " + std::to_string(drone) + " out of range (" +
                      std::to_string(trace.drone_count()) + " drones)");
  }
}

}  // namespace

double path_length(const SimulationTrace &trace, std::size_t drone) {
  check_drone(trace, drone);
  double total = 0.0;
  for (std::size_t f = 1; f < trace.frames.size(); ++f) {
    total += distance(trace.frames[f].position(drone), trace.frames[f - 1].position(drone));
  }
  return total;
}

double max_pairwise_distance(const SimulationTrace &trace, std::size_t i, std::size_t j) {
  check_drone(trace, i);
  check_drone(trace, j);
  if (i == j) throw DomainError("max_pairwise_distance needs two distinct drones");
  double best = 0.0;
  for (const auto &frame : trace.frames) {
    best = std::max(best, distance(frame.position(i), frame.position(j)));
  }
  return best;
}

std::optional<double> completion_time(const SimulationTrace &trace) {
  if (trace.outcome != Outcome::kCompleted) return std::nullopt;
  for (const auto &frame : trace.frames) {
    if (swarm_complete(trace.spec, frame)) return frame.t();
  }
  return std::nullopt;
}

double ape(const SimulationTrace &trace, const SimulationTrace &reference, std::size_t drone) {
  check_drone(trace, drone);
  check_drone(reference, drone);
  const double dt_a = trace.spec.dt;
  const double dt_b = reference.spec.dt;
  if (std::abs(dt_a - dt_b) > 1e-12 * std::max(dt_a, dt_b)) throw DomainError("ape: traces use different dt");

  const double reference_length = path_length(reference, drone);
  if (reference_length == 0.0) throw DomainError("ape: reference path length is zero");

  const std::size_t na = trace.frames.size();
  const std::size_t nb = reference.frames.size();
  const std::size_t stamps = std::max(na, nb);
  double sum = 0.0;
  for (std::size_t s = 0; s < stamps; ++s) {
    const Vec2 a = trace.frames[std::min(s, na - 1)].position(drone);
    const Vec2 b = reference.frames[std::min(s, nb - 1)].position(drone);
    sum += distance(a, b);
  }
  return 100.0 * (sum / static_cast<double>(stamps)) / reference_length;
}

RunMetrics run_metrics(const SimulationTrace &trace) {
  RunMetrics m;
  m.controller = trace.controller;
  m.outcome = trace.outcome;
  m.completion_time = completion_time(trace);
  m.frame_count = trace.frames.size();
  const std::size_t n = trace.drone_count();
  for (std::size_t i = 0; i < n; ++i) m.path_length.push_back(path_length(trace, i));
  m.max_distance.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = max_pairwise_distance(trace, i, j);
      m.max_distance[i][j] = d;
      m.max_distance[j][i] = d;
    }
  }
  return m;
}

MetricsReport report(const SimulationTrace &trace) {
  MetricsReport r;
  r.runs.push_back(run_metrics(trace));
  return r;
}

MetricsReport compare(const SimulationTrace &swarmpath, const SimulationTrace &baseline) {
  if (!(swarmpath.spec == baseline.spec)) throw ValidationError("compare: traces come from different scenarios");
  MetricsReport r;
  r.runs.push_back(run_metrics(swarmpath));
  r.runs.push_back(run_metrics(baseline));

  const auto &a = r.runs[0];
  const auto &b = r.runs[1];
  if (!a.completion_time || !b.completion_time) return r;
  // A zero-time reference (already complete at t = 0) has no meaningful ratio.
  if (*b.completion_time <= 0.0) return r;

  Comparison c;
  c.time_ratio = *a.completion_time / *b.completion_time;
  const std::size_t n = a.max_distance.size();
  c.distance_ratio.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) c.distance_ratio[i][j] = a.max_distance[i][j] / b.max_distance[i][j];
    }
  }
  r.comparison = std::move(c);
  return r;
}

}  // namespace swarmpath
