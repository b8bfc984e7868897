#include "leray/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "leray/errors.hpp"

namespace leray::fields {

namespace ex = leray::exterior3;

exterior3::FormField as_one_form(const VectorPotential& a, bool time_dependent) {
  return ex::FormField(
      1,
      [a](const Point3& p, double t) {
        const Vec3 v = a(p, t);
        return ex::Components{v.x, v.y, v.z};
      },
      time_dependent);
}

exterior3::FormField as_zero_form(const ScalarPotential& phi, bool time_dependent) {
  return ex::FormField(
      0, [phi](const Point3& p, double t) { return ex::Components{phi(p, t), 0.0, 0.0}; }, time_dependent);
}

double matched_step(double rel_tol, double scale) {
  if (!(rel_tol > 0.0) || !(scale > 0.0)) throw InvalidParameterError("matched step needs positive tolerance and scale");
  return std::cbrt(rel_tol) * scale;
}

Vec3 derive_B(const exterior3::FormField& a, const Point3& y, double t, exterior3::Step h) {
  if (a.degree() != 1) throw InvalidParameterError("derive_B expects a 1-form potential");
  const auto b = ex::hodge(ex::d_numeric(a, h))(y, t);
  return {b[0], b[1], b[2]};
}

Vec3 derive_B(const VectorPotential& a, const Point3& y, double t, exterior3::Step h) {
  return derive_B(as_one_form(a), y, t, h);
}

Vec3 derive_E(const ScalarPotential& phi, const VectorPotential& a, const Point3& y, double t, exterior3::Step h,
              double ht, bool time_dependent) {
  const auto g = ex::d_numeric(as_zero_form(phi), h)(y, t);
  Vec3 e{-g[0], -g[1], -g[2]};
  if (time_dependent) {
    if (!(ht > 0.0)) throw InvalidParameterError("time step must be positive");
    e -= (a(y, t + ht) - a(y, t - ht)) / (2.0 * ht);
  }
  return e;
}

double derivative_scale(const VectorPotential& a, const Point3& y, double t, double h) {
  double sum = 0.0;
  const Vec3 axes[3] = {{h, 0, 0}, {0, h, 0}, {0, 0, h}};
  for (const auto& e : axes) {
    const Vec3 col = (a(y + e, t) - a(y - e, t)) / (2.0 * h);
    sum += dot(col, col);
  }
  return std::sqrt(sum);
}

namespace {

Residual make_residual(double value, double scale) {
  Residual r{value, scale, 0.0};
  if (scale > 0.0) {
    r.relative = std::abs(value) / scale;
  } else if (value != 0.0) {
    r.relative = std::abs(value);
  }
  return r;
}

}  // namespace

Residual gauge_residual(const VectorPotential& a, const Point3& y, double t, exterior3::Step h) {
  const double step = h.value_or(ex::default_step(y));
  const double delta_a = ex::codifferential(as_one_form(a), step)(y, t)[0];
  return make_residual(delta_a, derivative_scale(a, y, t, step));
}

Residual lorenz_residual(const ScalarPotential& phi, const VectorPotential& a, const Point3& y, double t,
                         const MediumConstants& medium, exterior3::Step h, double ht) {
  if (!(ht > 0.0)) throw InvalidParameterError("time step must be positive");
  const double step = h.value_or(ex::default_step(y));
  const double delta_a = ex::codifferential(as_one_form(a, true), step)(y, t)[0];
  const double phi_dot = (phi(y, t + ht) - phi(y, t - ht)) / (2.0 * ht);
  const double em = medium.epsilon * medium.mu;
  return make_residual(delta_a - em * phi_dot, derivative_scale(a, y, t, step) + em * std::abs(phi_dot));
}

Residual divergence_b_residual(const VectorPotential& a, const Point3& y, double t, double h) {
  VectorPotential b = [a, h](const Point3& p, double tt) { return derive_B(a, p, tt, h); };
  const double div = ex::codifferential(as_one_form(b), h)(y, t)[0];
  return make_residual(div, derivative_scale(b, y, t, h));
}

AmpereCheck ampere_residual(const sources::CurveSource& source, const sources::Polyline& circuit, int linking_number,
                            const std::function<Vec3(const Point3&)>& h_field, const quad::QuadConfig& cfg) {
  if (circuit.empty()) throw InvalidParameterError("empty circuit");
  AmpereCheck out;
  for (const auto& piece : circuit) {
    auto f = [&](double s) { return dot(h_field(piece.position(s)), piece.tangent(s)); };
    const auto q = quad::integrate_adaptive(f, piece.begin, piece.end, cfg);
    out.circulation += q.value;
    out.error_estimate += q.error_estimate;
    out.converged = out.converged && q.converged;
  }
  out.enclosed = linking_number * sources::line_current(source, source.begin);
  out.residual = std::abs(out.circulation - out.enclosed) / std::max(std::abs(out.enclosed), 1.0);
  return out;
}

sources::Polyline polygon_circuit(const Point3& centre, const Vec3& e1, const Vec3& e2, double radius, int sides) {
  if (sides < 3) throw InvalidParameterError("a circuit polygon needs at least 3 sides");
  if (!(radius > 0.0)) throw InvalidParameterError("circuit radius must be positive");
  std::vector<Point3> v;
  for (int k = 0; k < sides; ++k) {
    const double th = 2.0 * std::numbers::pi * k / sides;
    v.push_back(centre + radius * (std::cos(th) * e1 + std::sin(th) * e2));
  }
  return sources::make_polyline(v, 0.0, true);
}

double distance_to_loop(double a, const Point3& y) {
  const auto c = y.cylindrical();
  return std::hypot(c.r - a, c.z);
}

double distance_to_curve(const sources::CurveSource& src, const Point3& y, int samples) {
  samples = std::max(samples, 8);
  const double w = (src.end - src.begin) / samples;
  auto dist = [&](double s) { return distance(src.position(std::clamp(s, src.begin, src.end)), y); };
  int best = 0;
  double best_d = dist(src.begin);
  for (int k = 1; k <= samples; ++k) {
    const double d = dist(src.begin + k * w);
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  // Golden-section search on the neighbouring panels.
  double lo = src.begin + std::max(best - 1, 0) * w;
  double hi = src.begin + std::min(best + 1, samples) * w;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = dist(x1), f2 = dist(x2);
  for (int it = 0; it < 100 && hi - lo > 1e-15 * (1.0 + std::abs(hi)); ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = dist(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = dist(x2);
    }
  }
  return std::min({best_d, f1, f2});
}

double distance_to_cylinder(double a, double length, const Point3& y) {
  const auto c = y.cylindrical();
  const double dz = c.z < 0.0 ? -c.z : (c.z > length ? c.z - length : 0.0);
  return std::hypot(c.r - a, dz);
}

}  // namespace leray::fields
