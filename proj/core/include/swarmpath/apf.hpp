#pragma once

#include <span>
#include <vector>

#include "swarmpath/vec2.hpp"
#include "swarmpath/world.hpp"

namespace swarmpath {

/// Below this field magnitude an agent is considered stuck in a local minimum.
inline constexpr double kStallForce = 1e-9;
/// Surface distances are clamped here before entering 1/d_o.
inline constexpr double kMinSurfaceDistance = 1e-6;

/// k_att * (goal - p).
Vec2 attraction_force(const Vec2 &p, const Vec2 &goal, double k_att);

/// Piecewise repulsion k_rep * (1/d_o - 1/r_apf) along (p - center), zero once
/// the surface distance d_o exceeds r_apf. Throws SingularityError when p is
/// the obstacle center.
Vec2 repulsion_force(const Vec2 &p, const Obstacle &obs, double k_rep);

Vec2 total_force(const Vec2 &p, const Vec2 &goal, std::span<const Obstacle> obstacles, const ApfParams &apf);

/// One constant-speed descent step of the field toward `goal`.
struct DescentStep {
  Vec2 position;
  bool reached_goal = false;
  bool stalled = false;
};

enum class Arrival {
  kHold,        // stop where the goal threshold was first met
  kSnapToGoal,  // the step entering the threshold lands on the goal itself
};

/// Moves `p` by min(leader_speed * dt, |goal - p|) along the normalized total
/// force. A point already inside the goal threshold is reported as reached
/// and left in place; a vanishing field is reported as a stall.
DescentStep descend(const Vec2 &p, const Vec2 &goal, std::span<const Obstacle> obstacles,
                    const ApfParams &apf, double dt, Arrival arrival);

/// The virtual leader: a massless point descending the potential field.
struct LeaderState {
  Vec2 position;
  bool reached_goal = false;
  /// Set when the last step found no usable field direction.
  bool stalled = false;

  friend bool operator==(const LeaderState &, const LeaderState &) = default;
};

LeaderState initial_leader(const ScenarioSpec &spec);

LeaderState leader_step(const LeaderState &state, const ScenarioSpec &spec,
                        std::span<const Obstacle> obstacles);
LeaderState leader_step(const LeaderState &state, const ScenarioSpec &spec);

enum class PathStatus { kCompleted, kMaxSteps, kStalled };

struct Path {
  std::vector<Vec2> points;
  double dt = 0.0;
  PathStatus status = PathStatus::kCompleted;

  double length() const;
};

/// Leader trajectory from start until the goal, a stall, or max_steps.
Path plan_leader_path(const ScenarioSpec &spec);

const char *to_string(PathStatus status);

}  // namespace swarmpath
