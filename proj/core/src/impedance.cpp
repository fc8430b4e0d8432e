#include "swarmpath/impedance.hpp"

#include <cmath>

#include "swarmpath/errors.hpp"

namespace swarmpath {

double critical_damping(double m, double k) {
  if (!(m > 0.0) || !(k > 0.0)) throw DomainError("critical_damping requires m > 0 and k > 0");
  return 2.0 * std::sqrt(m * k);
}

double natural_frequency(const ImpedanceParams &params) { return std::sqrt(params.k / params.m); }

LinkDynamicState link_step(const LinkDynamicState &state, const ExternalForce &f_ext,
                           const ImpedanceParams &params, double dt) {
  // Trapezoidal rule on (x, v), solved in closed form for v':
  //   x' = x + h/2 (v + v')
  //   m (v' - v) = h/2 [(f - d v - k x) + (f - d v' - k x')]
  const double h2 = 0.5 * dt;
  const double c = params.d / params.m;
  const double w2 = params.k / params.m;
  const double denom = 1.0 + h2 * c + h2 * h2 * w2;
  const Vec2 v = state.delta_v;
  const Vec2 x = state.delta_x;

  LinkDynamicState next;
  next.delta_v = (v * (1.0 - h2 * c - h2 * h2 * w2) + (2.0 * h2 / params.m) * (f_ext.f - params.k * x)) / denom;
  next.delta_x = x + h2 * (v + next.delta_v);
  return next;
}

double link_energy(const LinkDynamicState &state, const ImpedanceParams &params) {
  return 0.5 * params.m * state.delta_v.squared_norm() + 0.5 * params.k * state.delta_x.squared_norm();
}

double analytic_response(const ImpedanceParams &params, double x0, double v0, double t) {
  const double critical = critical_damping(params.m, params.k);
  if (std::abs(params.d - critical) > 1e-9 * critical) {
    throw DomainError("analytic_response covers only the critically damped case (d = 2*sqrt(m*k))");
  }
  const double wn = natural_frequency(params);
  return (x0 + (v0 + wn * x0) * t) * std::exp(-wn * t);
}

}  // namespace swarmpath
