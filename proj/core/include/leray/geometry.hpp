#pragma once

#include <cmath>

namespace leray {

/// Displacement, tangent or velocity in R³ (Euclidean metric).
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::hypot(a.x, a.y, a.z); }

/// Cylindrical coordinates (r, φ, z); φ in (-π, π].
struct Cylindrical {
  double r = 0.0;
  double phi = 0.0;
  double z = 0.0;
};

/// A position in R³. Differences of points are Vec3; a point plus a Vec3 is a point.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Point3() = default;
  constexpr Point3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  static Point3 from_cylindrical(double r, double phi, double z) {
    return {r * std::cos(phi), r * std::sin(phi), z};
  }
  static Point3 from_cylindrical(const Cylindrical& c) { return from_cylindrical(c.r, c.phi, c.z); }

  Cylindrical cylindrical() const { return {std::hypot(x, y), std::atan2(y, x), z}; }

  constexpr Vec3 as_vec() const { return {x, y, z}; }

  friend constexpr Point3 operator+(const Point3& p, const Vec3& v) {
    return {p.x + v.x, p.y + v.y, p.z + v.z};
  }
  friend constexpr Point3 operator-(const Point3& p, const Vec3& v) {
    return {p.x - v.x, p.y - v.y, p.z - v.z};
  }
  friend constexpr Vec3 operator-(const Point3& a, const Point3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr bool operator==(const Point3&, const Point3&) = default;
};

inline double distance(const Point3& a, const Point3& b) { return norm(a - b); }

/// Unit vectors ê_r, ê_φ at azimuth φ.
inline Vec3 radial_unit(double phi) { return {std::cos(phi), std::sin(phi), 0.0}; }
inline Vec3 azimuthal_unit(double phi) { return {-std::sin(phi), std::cos(phi), 0.0}; }

/// Cylindrical (orthonormal) components of a vector attached at azimuth φ.
inline Cylindrical to_cylindrical_components(const Vec3& v, double phi) {
  return {dot(v, radial_unit(phi)), dot(v, azimuthal_unit(phi)), v.z};
}

inline Vec3 from_cylindrical_components(double vr, double vphi, double vz, double phi) {
  return radial_unit(phi) * vr + azimuthal_unit(phi) * vphi + Vec3{0.0, 0.0, vz};
}

}  // namespace leray
