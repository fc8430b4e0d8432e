#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "swarmpath/apf.hpp"
#include "swarmpath/impedance.hpp"
#include "swarmpath/vec2.hpp"
#include "swarmpath/world.hpp"

namespace swarmpath {

/// The drone follows its formation slot behind the virtual leader.
struct LeaderLinked {
  friend bool operator==(const LeaderLinked &, const LeaderLinked &) = default;
};

/// The drone has detached from the leader and deflects off one obstacle,
/// identified by its index in the effective obstacle list.
struct ObstacleLinked {
  std::size_t obstacle = 0;
  friend bool operator==(const ObstacleLinked &, const ObstacleLinked &) = default;
};

using LinkMode = std::variant<LeaderLinked, ObstacleLinked>;

inline bool is_obstacle_linked(const LinkMode &mode) { return std::holds_alternative<ObstacleLinked>(mode); }

/// "L" or "O<k>".
std::string encode_mode(const LinkMode &mode);
/// Inverse of encode_mode; throws ParseError on anything else.
LinkMode decode_mode(std::string_view text);

/// EMA weight of the per-step speed sample in DroneState::mean_speed.
inline constexpr double kSpeedSmoothing = 0.05;

struct DroneState {
  std::size_t id = 0;
  Vec2 position;
  LinkDynamicState link;
  LinkMode mode = LeaderLinked{};
  double mean_speed = 0.0;

  friend bool operator==(const DroneState &, const DroneState &) = default;
};

struct SwarmState {
  LeaderState leader;
  std::vector<DroneState> drones;
  double t = 0.0;
  std::size_t step = 0;

  friend bool operator==(const SwarmState &, const SwarmState &) = default;
};

/// Leader at the start, every drone resting on its formation slot.
SwarmState initial_swarm_state(const ScenarioSpec &spec);

struct NearestObstacle {
  std::size_t index = 0;
  double surface_distance = 0.0;
};

/// Minimal surface distance, lowest index on ties; empty list gives nullopt.
std::optional<NearestObstacle> nearest_obstacle(const Vec2 &p, std::span<const Obstacle> obstacles);

LinkMode update_link_mode(const DroneState &drone, std::span<const Obstacle> obstacles,
                          const TopologyParams &topo);

/// Radially outward offset of length k_impF * (1 + velocity_gain * mean_speed) * r_imp.
Vec2 deflection_offset(const DroneState &drone, const Obstacle &obs, const TopologyParams &topo);

Vec2 desired_position(const DroneState &drone, const LeaderState &leader, const ScenarioSpec &spec,
                      std::span<const Obstacle> obstacles);
Vec2 desired_position(const DroneState &drone, const LeaderState &leader, const ScenarioSpec &spec);

/// Leader first, then every drone: mode update, new set-point, one link step
/// with zero external force, running speed average.
SwarmState swarm_step(const SwarmState &state, const ScenarioSpec &spec, std::span<const Obstacle> obstacles);
SwarmState swarm_step(const SwarmState &state, const ScenarioSpec &spec);

}  // namespace swarmpath
