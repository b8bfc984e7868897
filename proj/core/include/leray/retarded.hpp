#pragma once

#include "leray/medium.hpp"
#include "leray/sources.hpp"

namespace leray::fields {

struct RetardedState {
  double t_ret = 0.0;
  double jacobian = 1.0;  // 𝒬 = 1/(1 - n·v/c)
  Vec3 n;                 // unit vector from x(t') to the field point
  Point3 position;        // x(t')
  Vec3 velocity;          // v(t')
  double distance = 0.0;  // |x(t') - y|
  int iterations = 0;
};

/// Solves t' + |x(t') - y|/c = t by bracketing and safeguarded Newton.
/// `tol` is relative to the light-travel time |x(t') - y|/c.
/// Throws SuperluminalError when |v| >= c is met, CoincidentPointsError
/// when the field point sits on the charge, NonConvergenceError otherwise.
RetardedState solve_retarded_time(const sources::PointSource& src, const Point3& y, double t, double c,
                                  double tol = 1e-12);

/// φ = q𝒬/(4πεR), A = μq𝒬v/(4πR) at the retarded time.
PotentialResult lienard_wiechert(const sources::PointSource& src, const Point3& y, double t,
                                 const MediumConstants& medium = {}, double tol = 1e-12);

}  // namespace leray::fields
