#pragma once

#include <cmath>
#include <random>

#include "leray/geometry.hpp"

namespace leray::test {

// Fixed-seed generators; every property test draws from its own seed so
// adding a test never perturbs another.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Point3 point(double half_width) {
    return {uniform(-half_width, half_width), uniform(-half_width, half_width), uniform(-half_width, half_width)};
  }
  Vec3 vec(double half_width) { return point(half_width).as_vec(); }
  // A point at distance in [rmin, rmax] from `centre`, direction uniform on the sphere.
  Point3 shell(const Point3& centre, double rmin, double rmax) {
    Vec3 d;
    do d = vec(1.0);
    while (norm(d) < 1e-3 || norm(d) > 1.0);
    return centre + d * (uniform(rmin, rmax) / norm(d));
  }

 private:
  std::mt19937_64 rng_;
};

inline double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }
inline double rel_err(const Vec3& got, const Vec3& want) { return norm(got - want) / norm(want); }

}  // namespace leray::test
