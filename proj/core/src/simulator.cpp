#include "swarmpath/simulator.hpp"

#include <algorithm>

#include "swarmpath/errors.hpp"

namespace swarmpath {

const char *to_string(Controller controller) {
  return controller == Controller::kSwarmPath ? "swarmpath" : "conventional-apf";
}

const char *to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kCompleted:
      return "completed";
    case Outcome::kMaxSteps:
      return "max_steps";
    case Outcome::kStalled:
      return "stalled";
  }
  return "unknown";
}

std::optional<Controller> parse_controller(std::string_view name) {
  if (name == "swarmpath") return Controller::kSwarmPath;
  if (name == "apf" || name == "conventional-apf") return Controller::kConventionalApf;
  return std::nullopt;
}

std::optional<Outcome> parse_outcome(std::string_view name) {
  for (auto o : {Outcome::kCompleted, Outcome::kMaxSteps, Outcome::kStalled}) {
    if (name == to_string(o)) return o;
  }
  return std::nullopt;
}

double Frame::t() const {
  return std::visit([](const auto &s) { return s.t; }, state_);
}

std::size_t Frame::step() const {
  return std::visit([](const auto &s) { return s.step; }, state_);
}

std::size_t Frame::drone_count() const {
  return std::visit([](const auto &s) { return s.drones.size(); }, state_);
}

Vec2 Frame::position(std::size_t drone) const {
  return std::visit([drone](const auto &s) { return s.drones.at(drone).position; }, state_);
}

std::optional<LinkMode> Frame::mode(std::size_t drone) const {
  if (const auto *s = swarm()) return s->drones.at(drone).mode;
  return std::nullopt;
}

std::optional<Vec2> Frame::leader() const {
  if (const auto *s = swarm()) return s->leader.position;
  return std::nullopt;
}

bool swarm_complete(const ScenarioSpec &spec, const Frame &frame) {
  for (std::size_t i = 0; i < frame.drone_count(); ++i) {
    if (distance(frame.position(i), spec.drone_goal(i)) > spec.apf.goal_threshold) return false;
  }
  return true;
}

Frame initial_frame(const ScenarioSpec &spec, Controller controller) {
  if (controller == Controller::kSwarmPath) return Frame(initial_swarm_state(spec));
  return Frame(BaselineState{initial_baseline_state(spec), 0.0, 0});
}

Frame advance(const Frame &frame, const ScenarioSpec &spec, std::span<const Obstacle> obstacles) {
  if (const auto *s = frame.swarm()) return Frame(swarm_step(*s, spec, obstacles));
  const auto &b = *frame.baseline();
  BaselineState next{baseline_step(b.drones, spec, obstacles), 0.0, b.step + 1};
  next.t = static_cast<double>(next.step) * spec.dt;
  return Frame(std::move(next));
}

namespace {

bool frame_stalled(const Frame &frame) {
  if (const auto *s = frame.swarm()) return s->leader.stalled;
  const auto &drones = frame.baseline()->drones;
  return std::any_of(drones.begin(), drones.end(), [](const auto &d) { return d.stalled; });
}

}  // namespace

SimulationTrace run(const ScenarioSpec &spec, Controller controller) {
  const auto obstacles = effective_obstacles(spec);
  SimulationTrace trace;
  trace.spec = spec;
  trace.controller = controller;
  trace.frames.push_back(initial_frame(spec, controller));

  if (swarm_complete(spec, trace.frames.back())) {
    trace.outcome = Outcome::kCompleted;
    return trace;
  }

  std::size_t stalled_steps = 0;
  for (std::size_t step = 0; step < spec.max_steps; ++step) {
    Frame next;
    try {
      next = advance(trace.frames.back(), spec, obstacles);
    } catch (const Error &e) {
      throw SimulationError(step + 1, e.what());
    }
    trace.frames.push_back(std::move(next));
    const Frame &current = trace.frames.back();

    if (swarm_complete(spec, current)) {
      trace.outcome = Outcome::kCompleted;
      return trace;
    }
    stalled_steps = frame_stalled(current) ? stalled_steps + 1 : 0;
    if (stalled_steps >= kStallCutoff) {
      trace.outcome = Outcome::kStalled;
      return trace;
    }
  }
  trace.outcome = Outcome::kMaxSteps;
  return trace;
}

}  // namespace swarmpath
