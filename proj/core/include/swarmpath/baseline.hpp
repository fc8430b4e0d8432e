#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "swarmpath/world.hpp"

namespace swarmpath {

/// Drone of the conventional potential-field comparator. Each one descends
/// the field toward its own goal (goal + formation offset), unaware of the
/// others and without impedance links.
struct BaselineDroneState {
  std::size_t id = 0;
  Vec2 position;
  bool reached_goal = false;
  bool stalled = false;

  friend bool operator==(const BaselineDroneState &, const BaselineDroneState &) = default;
};

std::vector<BaselineDroneState> initial_baseline_state(const ScenarioSpec &spec);

std::vector<BaselineDroneState> baseline_step(std::span<const BaselineDroneState> drones, const ScenarioSpec &spec,
                                              std::span<const Obstacle> obstacles);
std::vector<BaselineDroneState> baseline_step(std::span<const BaselineDroneState> drones, const ScenarioSpec &spec);

}  // namespace swarmpath
