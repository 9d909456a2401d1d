#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hhball {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3() = default;
  Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  double operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm_squared() const { return dot(*this); }
  double norm() const { return std::sqrt(norm_squared()); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Closed ball B(center, radius) in R^3; the integration domain of every check.
struct Ball {
  Vec3 center;
  double radius = 1.0;

  Ball() = default;
  Ball(const Vec3& c, double r) : center(c), radius(r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw std::invalid_argument("ball radius must be positive and finite");
    }
    if (!c.finite()) {
      throw std::invalid_argument("ball center coordinates must be finite");
    }
  }

  double volume() const { return (4.0 / 3.0) * M_PI * radius * radius * radius; }
  double surface_area() const { return 4.0 * M_PI * radius * radius; }
};

/// Point in spherical coordinates relative to a ball center.
/// rho in [0, R], phi in [0, pi] (polar angle from +z), theta in [0, 2*pi) (azimuth).
struct SphericalCoord {
  double rho = 0.0;
  double phi = 0.0;
  double theta = 0.0;
};

/// Unit vector of the ray with polar angle phi and azimuth theta.
inline Vec3 ray_direction(double phi, double theta) {
  const double s = std::sin(phi);
  return {s * std::cos(theta), s * std::sin(theta), std::cos(phi)};
}

/// Maps spherical coordinates to the Cartesian point center + rho * direction(phi, theta).
/// Throws std::domain_error when rho is outside [0, R] or phi outside [0, pi].
Vec3 to_cartesian(const Ball& ball, const SphericalCoord& s);

/// Jacobian factor rho^2 * sin(phi) of the spherical volume element.
inline double volume_element(const SphericalCoord& s) {
  return s.rho * s.rho * std::sin(s.phi);
}

/// Inverse of to_cartesian: spherical coordinates of p relative to ball.center.
/// Points beyond the ball surface are clamped to rho = R. At p == center the
/// direction is undefined; (0, 0, 0) is returned.
SphericalCoord spherical_from_point(const Ball& ball, const Vec3& p);

}  // namespace hhball
