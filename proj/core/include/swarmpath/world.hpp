#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "swarmpath/vec2.hpp"

namespace swarmpath {

/// Circular obstacle seen from above.
///
/// All three radii are measured in meters. `r_apf` is the surface-distance
/// cutoff of the potential-field repulsion and `r_imp` the surface-distance
/// radius of the region in which a follower links to the obstacle.
/// Invariants: 0 < radius < r_imp <= r_apf.
struct Obstacle {
  Vec2 center;
  double radius = 0.0;
  double r_apf = 0.0;
  double r_imp = 0.0;

  /// Distance from `p` to the obstacle body (negative inside).
  double surface_distance(const Vec2 &p) const { return distance(p, center) - radius; }

  friend bool operator==(const Obstacle &, const Obstacle &) = default;
};

/// Two poles; a gate is nothing more than the pair of obstacles.
struct Gate {
  Obstacle pole_a;
  Obstacle pole_b;

  friend bool operator==(const Gate &, const Gate &) = default;
};

/// Mass-spring-damper link constants (kg, N*s/m, N/m).
struct ImpedanceParams {
  double m = 1.9;
  double d = 12.6;
  double k = 20.88;

  friend bool operator==(const ImpedanceParams &, const ImpedanceParams &) = default;
};

struct ApfParams {
  double k_att = 1.0;
  double k_rep = 0.3;
  double leader_speed = 0.5;    // m/s
  double goal_threshold = 0.1;  // m

  friend bool operator==(const ApfParams &, const ApfParams &) = default;
};

struct TopologyParams {
  double k_impF = 1.0;
  /// Release happens only beyond r_imp * (1 + hysteresis).
  double hysteresis = 0.1;
  /// k_impF is scaled by (1 + velocity_gain * mean drone speed).
  double velocity_gain = 0.0;

  friend bool operator==(const TopologyParams &, const TopologyParams &) = default;
};

/// Complete description of one simulated mission.
struct ScenarioSpec {
  std::string description;
  Vec2 start;
  Vec2 goal;
  std::vector<Obstacle> obstacles;
  std::vector<Gate> gates;
  /// One entry per drone, relative to the virtual leader.
  std::vector<Vec2> formation_offsets;
  ImpedanceParams impedance;
  ApfParams apf;
  TopologyParams topology;
  double dt = 0.01;
  std::size_t max_steps = 20000;

  std::size_t drone_count() const { return formation_offsets.size(); }
  Vec2 drone_goal(std::size_t id) const { return goal + formation_offsets.at(id); }
  Vec2 drone_start(std::size_t id) const { return start + formation_offsets.at(id); }

  friend bool operator==(const ScenarioSpec &, const ScenarioSpec &) = default;
};

/// Square of side 0.8 m centered on the leader, four drones.
std::vector<Vec2> default_formation();

/// Free obstacles followed by the poles of every gate, in declaration order.
std::vector<Obstacle> effective_obstacles(const ScenarioSpec &spec);

/// Throws ValidationError naming the first violated invariant.
void validate(const ScenarioSpec &spec);

/// Parses and validates a JSON scenario document.
ScenarioSpec load_scenario(std::string_view text);
ScenarioSpec load_scenario_file(const std::filesystem::path &path);

/// Canonical JSON form; load_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const ScenarioSpec &spec);

}  // namespace swarmpath
