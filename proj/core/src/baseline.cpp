#include "swarmpath/baseline.hpp"

#include "swarmpath/apf.hpp"

namespace swarmpath {

std::vector<BaselineDroneState> initial_baseline_state(const ScenarioSpec &spec) {
  std::vector<BaselineDroneState> drones;
  drones.reserve(spec.drone_count());
  for (std::size_t i = 0; i < spec.drone_count(); ++i) {
    const Vec2 p = spec.drone_start(i);
    drones.push_back({i, p, distance(p, spec.drone_goal(i)) <= spec.apf.goal_threshold, false});
  }
  return drones;
}

std::vector<BaselineDroneState> baseline_step(std::span<const BaselineDroneState> drones, const ScenarioSpec &spec,
                                              std::span<const Obstacle> obstacles) {
  std::vector<BaselineDroneState> next;
  next.reserve(drones.size());
  for (const auto &d : drones) {
    if (d.reached_goal) {
      next.push_back({d.id, d.position, true, false});
      continue;
    }
    const auto s = descend(d.position, spec.drone_goal(d.id), obstacles, spec.apf, spec.dt, Arrival::kHold);
    next.push_back({d.id, s.position, s.reached_goal, s.stalled});
  }
  return next;
}

std::vector<BaselineDroneState> baseline_step(std::span<const BaselineDroneState> drones, const ScenarioSpec &spec) {
  const auto obstacles = effective_obstacles(spec);
  return baseline_step(drones, spec, obstacles);
}

}  // namespace swarmpath
