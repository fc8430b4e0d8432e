#include "swarmpath/topology.hpp"

#include <charconv>

#include "swarmpath/errors.hpp"

namespace swarmpath {

std::string encode_mode(const LinkMode &mode) {
  if (const auto *linked = std::get_if<ObstacleLinked>(&mode)) {
    return "O" + std::to_string(linked->obstacle);
  }
  return "L";
}

LinkMode decode_mode(std::string_view text) {
  if (text == "L") return LeaderLinked{};
  if (text.size() >= 2 && text.front() == 'O') {
    std::size_t index = 0;
    const auto *first = text.data() + 1;
    const auto *last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec == std::errc() && ptr == last) return ObstacleLinked{index};
  }
  throw ParseError("invalid link mode '" + std::string(text) + "'");
}

SwarmState initial_swarm_state(const ScenarioSpec &spec) {
  SwarmState state;
  state.leader = initial_leader(spec);
  state.drones.reserve(spec.drone_count());
  for (std::size_t i = 0; i < spec.drone_count(); ++i) {
    DroneState d;
    d.id = i;
    d.position = spec.drone_start(i);
    state.drones.push_back(d);
  }
  return state;
}

std::optional<NearestObstacle> nearest_obstacle(const Vec2 &p, std::span<const Obstacle> obstacles) {
  std::optional<NearestObstacle> best;
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    const double d = obstacles[i].surface_distance(p);
    if (!best || d < best->surface_distance) best = NearestObstacle{i, d};
  }
  return best;
}

LinkMode update_link_mode(const DroneState &drone, std::span<const Obstacle> obstacles,
                          const TopologyParams &topo) {
  if (const auto *linked = std::get_if<ObstacleLinked>(&drone.mode)) {
    const Obstacle &obs = obstacles[linked->obstacle];
    if (obs.surface_distance(drone.position) > obs.r_imp * (1.0 + topo.hysteresis)) return LeaderLinked{};
    return drone.mode;
  }
  const auto nearest = nearest_obstacle(drone.position, obstacles);
  if (nearest && nearest->surface_distance < obstacles[nearest->index].r_imp) {
    return ObstacleLinked{nearest->index};
  }
  return LeaderLinked{};
}

Vec2 deflection_offset(const DroneState &drone, const Obstacle &obs, const TopologyParams &topo) {
  const Vec2 outward = drone.position - obs.center;
  const double len = outward.norm();
  if (len == 0.0) throw SingularityError("singular deflection direction");
  const double gain = topo.k_impF * (1.0 + topo.velocity_gain * drone.mean_speed);
  return outward * (gain * obs.r_imp / len);
}

Vec2 desired_position(const DroneState &drone, const LeaderState &leader, const ScenarioSpec &spec,
                      std::span<const Obstacle> obstacles) {
  const Vec2 slot = leader.position + spec.formation_offsets.at(drone.id);
  if (const auto *linked = std::get_if<ObstacleLinked>(&drone.mode)) {
    return slot + deflection_offset(drone, obstacles[linked->obstacle], spec.topology);
  }
  return slot;
}

Vec2 desired_position(const DroneState &drone, const LeaderState &leader, const ScenarioSpec &spec) {
  const auto obstacles = effective_obstacles(spec);
  return desired_position(drone, leader, spec, obstacles);
}

SwarmState swarm_step(const SwarmState &state, const ScenarioSpec &spec, std::span<const Obstacle> obstacles) {
  SwarmState next;
  next.leader = leader_step(state.leader, spec, obstacles);
  next.step = state.step + 1;
  next.t = static_cast<double>(next.step) * spec.dt;
  next.drones.reserve(state.drones.size());

  for (const auto &drone : state.drones) {
    DroneState d = drone;
    d.mode = update_link_mode(drone, obstacles, spec.topology);
    const Vec2 target = desired_position(d, next.leader, spec, obstacles);

    const LinkDynamicState before{drone.position - target, drone.link.delta_v};
    d.link = link_step(before, ExternalForce{}, spec.impedance, spec.dt);
    d.position = target + d.link.delta_x;

    const double speed = distance(d.position, drone.position) / spec.dt;
    d.mean_speed = (1.0 - kSpeedSmoothing) * drone.mean_speed + kSpeedSmoothing * speed;
    next.drones.push_back(d);
  }
  return next;
}

SwarmState swarm_step(const SwarmState &state, const ScenarioSpec &spec) {
  const auto obstacles = effective_obstacles(spec);
  return swarm_step(state, spec, obstacles);
}

}  // namespace swarmpath
