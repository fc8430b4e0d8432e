#pragma once

#include "swarmpath/vec2.hpp"
#include "swarmpath/world.hpp"

namespace swarmpath {

/// Displacement of a drone from its desired position and the rate of that
/// displacement. Both axes share one set of link constants.
struct LinkDynamicState {
  Vec2 delta_x;
  Vec2 delta_v;

  friend bool operator==(const LinkDynamicState &, const LinkDynamicState &) = default;
};

/// Virtual force driving the link, in newtons.
struct ExternalForce {
  Vec2 f;
};

/// 2 * sqrt(m * k). Throws DomainError unless m > 0 and k > 0.
double critical_damping(double m, double k);

/// Natural frequency sqrt(k / m).
double natural_frequency(const ImpedanceParams &params);

/// One step of m*a + d*v + k*x = f per axis, with f held constant over the
/// step. Trapezoidal rule: second order, A-stable, and it never adds energy
/// to an unforced link.
LinkDynamicState link_step(const LinkDynamicState &state, const ExternalForce &f_ext,
                           const ImpedanceParams &params, double dt);

/// Stored link energy 0.5*m*|v|^2 + 0.5*k*|x|^2.
double link_energy(const LinkDynamicState &state, const ImpedanceParams &params);

/// Closed-form unforced response of a critically damped scalar link:
/// (x0 + (v0 + wn*x0) t) exp(-wn t). Throws DomainError if `params` is not
/// critically damped to within 1e-9 relative.
double analytic_response(const ImpedanceParams &params, double x0, double v0, double t);

}  // namespace swarmpath
