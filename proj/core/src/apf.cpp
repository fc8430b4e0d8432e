#include "swarmpath/apf.hpp"

#include <algorithm>

#include "swarmpath/errors.hpp"

namespace swarmpath {

Vec2 attraction_force(const Vec2 &p, const Vec2 &goal, double k_att) { return k_att * (goal - p); }

Vec2 repulsion_force(const Vec2 &p, const Obstacle &obs, double k_rep) {
  const Vec2 away = p - obs.center;
  const double center_distance = away.norm();
  if (center_distance == 0.0) throw SingularityError("singular repulsion direction");

  const double d_o = std::max(center_distance - obs.radius, kMinSurfaceDistance);
  if (d_o > obs.r_apf) return {};
  const double magnitude = k_rep * (1.0 / d_o - 1.0 / obs.r_apf);
  return away * (magnitude / center_distance);
}

Vec2 total_force(const Vec2 &p, const Vec2 &goal, std::span<const Obstacle> obstacles, const ApfParams &apf) {
  Vec2 f = attraction_force(p, goal, apf.k_att);
  for (const auto &o : obstacles) f += repulsion_force(p, o, apf.k_rep);
  return f;
}

DescentStep descend(const Vec2 &p, const Vec2 &goal, std::span<const Obstacle> obstacles,
                    const ApfParams &apf, double dt, Arrival arrival) {
  const double remaining = distance(goal, p);
  if (remaining <= apf.goal_threshold) return {p, true, false};

  const Vec2 f = total_force(p, goal, obstacles, apf);
  const double magnitude = f.norm();
  if (magnitude < kStallForce) return {p, false, true};

  // The final step is shortened so that a small threshold cannot make the
  // agent hop back and forth across the goal.
  const double step = std::min(apf.leader_speed * dt, remaining);
  DescentStep out{p + f * (step / magnitude), false, false};
  if (distance(goal, out.position) <= apf.goal_threshold) {
    out.reached_goal = true;
    if (arrival == Arrival::kSnapToGoal) out.position = goal;
  }
  return out;
}

LeaderState initial_leader(const ScenarioSpec &spec) {
  return {spec.start, distance(spec.goal, spec.start) <= spec.apf.goal_threshold, false};
}

LeaderState leader_step(const LeaderState &state, const ScenarioSpec &spec,
                        std::span<const Obstacle> obstacles) {
  if (state.reached_goal) return {state.position, true, false};
  const auto s = descend(state.position, spec.goal, obstacles, spec.apf, spec.dt, Arrival::kSnapToGoal);
  return {s.position, s.reached_goal, s.stalled};
}

LeaderState leader_step(const LeaderState &state, const ScenarioSpec &spec) {
  const auto obstacles = effective_obstacles(spec);
  return leader_step(state, spec, obstacles);
}

double Path::length() const {
  double total = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) total += distance(points[i], points[i - 1]);
  return total;
}

Path plan_leader_path(const ScenarioSpec &spec) {
  const auto obstacles = effective_obstacles(spec);
  Path path;
  path.dt = spec.dt;

  LeaderState leader = initial_leader(spec);
  path.points.push_back(leader.position);
  if (leader.reached_goal) return path;

  for (std::size_t s = 0; s < spec.max_steps; ++s) {
    leader = leader_step(leader, spec, obstacles);
    if (leader.stalled) {
      path.status = PathStatus::kStalled;
      return path;
    }
    path.points.push_back(leader.position);
    if (leader.reached_goal) return path;
  }
  path.status = PathStatus::kMaxSteps;
  return path;
}

const char *to_string(PathStatus status) {
  switch (status) {
    case PathStatus::kCompleted:
      return "completed";
    case PathStatus::kMaxSteps:
      return "incomplete: max_steps";
    case PathStatus::kStalled:
      return "incomplete: stalled at local minimum";
  }
  return "unknown";
}

}  // namespace swarmpath
