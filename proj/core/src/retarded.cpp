#include "leray/retarded.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "leray/errors.hpp"
#include "leray/kernels.hpp"

namespace leray::fields {

namespace {

constexpr int kMaxDoublings = 200;
constexpr int kMaxIterations = 200;

struct Sample {
  double g;      // t' + R/c - t
  double slope;  // dg/dt' = 1 - n·v/c
  double r;
  Point3 x;
  Vec3 v;
};

}  // namespace

RetardedState solve_retarded_time(const sources::PointSource& src, const Point3& y, double t, double c, double tol) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidParameterError("wave speed must be positive");
  if (!(tol > 0.0)) throw InvalidParameterError("retarded-time tolerance must be positive");
  if (!std::isfinite(t)) throw InvalidParameterError("time must be finite");

  auto sample = [&](double tp) {
    Sample s;
    s.x = src.trajectory(tp);
    s.v = src.velocity(tp);
    if (!(norm(s.v) < c)) throw SuperluminalError("trajectory speed reaches the wave speed");
    const Vec3 d = y - s.x;
    s.r = norm(d);
    s.g = tp + s.r / c - t;
    s.slope = s.r > 0.0 ? 1.0 - dot(d, s.v) / (s.r * c) : 1.0;
    return s;
  };

  Sample hi_s = sample(t);
  if (hi_s.r < kernels::coincidence_floor(hi_s.x, y)) throw CoincidentPointsError("field point on the charge");

  // g(t) = R(t)/c > 0 and g is strictly increasing; walk back until g < 0.
  double hi = t;
  double delta = hi_s.r / c;
  double lo = t - delta;
  Sample lo_s = sample(lo);
  int doublings = 0;
  while (lo_s.g >= 0.0) {
    if (++doublings > kMaxDoublings) throw NonConvergenceError("could not bracket the retarded time");
    delta *= 2.0;
    lo = t - delta;
    lo_s = sample(lo);
  }

  // Start Newton from the free-space guess, which is exact for a static source.
  double tp = t - hi_s.r / c;
  Sample s = sample(tp);
  for (int it = 1; it <= kMaxIterations; ++it) {
    const double scale = std::max(s.r / c, std::numeric_limits<double>::min());
    if (std::abs(s.g) <= tol * scale) {
      if (s.r < kernels::coincidence_floor(s.x, y)) throw CoincidentPointsError("field point on the charge");
      const Vec3 d = y - s.x;
      RetardedState out;
      out.t_ret = tp;
      out.distance = s.r;
      out.n = d / s.r;
      out.position = s.x;
      out.velocity = s.v;
      out.jacobian = 1.0 / (1.0 - dot(out.n, s.v) / c);
      out.iterations = it;
      return out;
    }
    if (s.g < 0.0) {
      lo = tp;
    } else {
      hi = tp;
    }
    double next = tp - s.g / s.slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == tp) break;
    tp = next;
    s = sample(tp);
  }
  throw NonConvergenceError("retarded-time iteration did not converge");
}

PotentialResult lienard_wiechert(const sources::PointSource& src, const Point3& y, double t,
                                 const MediumConstants& medium, double tol) {
  medium.validate();
  const auto st = solve_retarded_time(src, y, t, medium.c(), tol);
  const double k = src.charge * st.jacobian / (4.0 * std::numbers::pi * st.distance);
  PotentialResult out;
  out.phi = k / medium.epsilon;
  out.A = (medium.mu * k) * st.velocity;
  return out;
}

}  // namespace leray::fields
