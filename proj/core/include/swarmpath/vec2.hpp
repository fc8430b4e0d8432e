#pragma once

#include <cmath>
#include <ostream>

namespace swarmpath {

/// Point or displacement in the horizontal flight plane, in meters.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 &operator+=(const Vec2 &o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2 &operator-=(const Vec2 &o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Vec2 &operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
  }

  friend constexpr Vec2 operator+(Vec2 a, const Vec2 &b) { return a += b; }
  friend constexpr Vec2 operator-(Vec2 a, const Vec2 &b) { return a -= b; }
  friend constexpr Vec2 operator-(const Vec2 &a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
  friend constexpr Vec2 operator/(const Vec2 &a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(const Vec2 &, const Vec2 &) = default;

  double norm() const { return std::hypot(x, y); }
  constexpr double squared_norm() const { return x * x + y * y; }
  constexpr double dot(const Vec2 &o) const { return x * o.x + y * o.y; }
  constexpr double cross(const Vec2 &o) const { return x * o.y - y * o.x; }
  bool is_finite() const { return std::isfinite(x) && std::isfinite(y); }

  /// Counter-clockwise rotation about the origin.
  Vec2 rotated(double angle) const {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * x - s * y, s * x + c * y};
  }

  friend std::ostream &operator<<(std::ostream &os, const Vec2 &v) {
    return os << '(' << v.x << ", " << v.y << ')';
  }
};

inline double distance(const Vec2 &a, const Vec2 &b) { return (a - b).norm(); }

}  // namespace swarmpath
