#include "leray/magneto.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "leray/errors.hpp"
#include "leray/kernels.hpp"
#include "leray/verify.hpp"

namespace leray::fields {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSupportFloor = 1e-9;  // relative to the source radius

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidParameterError(std::string(what) + " must be positive");
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw InvalidParameterError(std::string(what) + " must be finite");
}

// Splits [a, b] into `pieces` panels so that oscillating integrands start
// from a resolved partition, then sums the adaptive results.
quad::QuadResult integrate_pieces(const quad::Integrand& f, double a, double b, int pieces,
                                  const quad::QuadConfig& cfg) {
  quad::QuadResult total;
  total.converged = true;
  const double w = (b - a) / pieces;
  for (int k = 0; k < pieces; ++k) {
    const double lo = a + k * w;
    const double hi = k + 1 == pieces ? b : lo + w;
    const auto r = quad::integrate_adaptive(f, lo, hi, cfg);
    total.value += r.value;
    total.error_estimate += r.error_estimate;
    total.evaluations += r.evaluations;
    total.converged = total.converged && r.converged;
  }
  return total;
}

// Signed moments ∫ g(s) f(s) ds with |g| ≤ 1 can cancel to zero by symmetry,
// where a purely relative target is unreachable. Judge them against ∫|f|.
quad::QuadConfig moment_config(const quad::QuadConfig& cfg, double magnitude) {
  quad::QuadConfig out = cfg;
  out.abs_tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(magnitude));
  return out;
}

}  // namespace

PotentialResult loop_potential(double a, double current, const Point3& y, const quad::QuadConfig& cfg,
                               const MediumConstants& medium) {
  require_positive(a, "loop radius");
  require_finite(current, "current");
  medium.validate();
  cfg.validate();
  const auto c = y.cylindrical();
  const double d2 = (c.r - a) * (c.r - a) + c.z * c.z;
  if (std::sqrt(d2) <= kSupportFloor * a) throw OnSupportError("field point on the loop wire");
  PotentialResult out;
  if (c.r == 0.0) return out;  // r dφ prefactor
  // r² + a² + z² - 2ar cos Ψ written without cancellation near the wire.
  const double four_ar = 4.0 * a * c.r;
  auto f = [=](double psi) {
    const double s = std::sin(0.5 * psi);
    return a * std::cos(psi) / std::sqrt(d2 + four_ar * s * s);
  };
  const auto q = quad::integrate_periodic_refined(f, 2.0 * kPi, cfg);
  const double k = medium.mu * current / (4.0 * kPi);
  out.A = (k * q.value) * azimuthal_unit(c.phi);
  out.diagnostics.absorb(q, k);
  return out;
}

PotentialResult helix_potential(double a, double p, double length, double current, const Point3& y,
                                const quad::QuadConfig& cfg, const MediumConstants& medium) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidParameterError("helix pitch must satisfy 0 < p < 1");
  const double P = sources::helix_wavenumber(a, p);
  require_positive(length, "helix length");
  require_finite(current, "current");
  medium.validate();
  cfg.validate();
  const auto c = y.cylindrical();
  const double floor = kSupportFloor * a;
  auto R = [=](double s) {
    const double dz = c.z - p * s;
    const double h = std::sin(0.5 * (P * s - c.phi));
    const double r2 = (c.r - a) * (c.r - a) + dz * dz + 4.0 * a * c.r * h * h;
    const double r = std::sqrt(r2);
    if (r <= floor) throw OnSupportError("field point on the helix");
    return r;
  };
  const int turns = std::max(1, static_cast<int>(std::ceil(length * P / (2.0 * kPi))));
  const auto qz = integrate_pieces([&](double s) { return 1.0 / R(s); }, 0.0, length, turns, cfg);
  const auto mcfg = moment_config(cfg, qz.value);
  const auto qr = integrate_pieces([&](double s) { return std::sin(P * s - c.phi) / R(s); }, 0.0, length, turns, mcfg);
  const auto qp = integrate_pieces([&](double s) { return std::cos(P * s - c.phi) / R(s); }, 0.0, length, turns, mcfg);
  const double k = medium.mu * current / (4.0 * kPi);
  PotentialResult out;
  out.A = from_cylindrical_components(-k * a * P * qr.value, k * a * P * qp.value, k * p * qz.value, c.phi);
  out.diagnostics.absorb(qr, k * a * P);
  out.diagnostics.absorb(qp, k * a * P);
  out.diagnostics.absorb(qz, k * p);
  return out;
}

PotentialResult solenoid_potential(double a, double p, double length, double kappa0, const Point3& y,
                                   const quad::QuadConfig& cfg, const MediumConstants& medium,
                                   SolenoidMethod method) {
  const double P = sources::helix_wavenumber(a, p);
  require_positive(length, "solenoid length");
  require_finite(kappa0, "kappa0");
  medium.validate();
  cfg.validate();
  if (distance_to_cylinder(a, length, y) <= kSupportFloor * a) throw OnSupportError("field point on the solenoid sheet");
  const auto c = y.cylindrical();
  // ψ = σ - φ runs over [0, 2π] so a near-singular ψ = 0 sits at the ends.
  auto s2 = [=](double psi) {
    const double h = std::sin(0.5 * psi);
    return (c.r - a) * (c.r - a) + 4.0 * a * c.r * h * h;
  };
  const double k = medium.mu * kappa0 * a / (4.0 * kPi);
  std::array<quad::QuadResult, 3> q;  // sin, cos, 1 moments
  if (method == SolenoidMethod::closed_inner) {
    auto F = [&](double psi) {
      const double s = std::sqrt(s2(psi));
      return std::asinh((length - c.z) / s) + std::asinh(c.z / s);
    };
    q[2] = quad::integrate_adaptive(F, 0.0, 2.0 * kPi, cfg);
    const auto mcfg = moment_config(cfg, q[2].value);
    q[0] = quad::integrate_adaptive([&](double psi) { return std::sin(psi) * F(psi); }, 0.0, 2.0 * kPi, mcfg);
    q[1] = quad::integrate_adaptive([&](double psi) { return std::cos(psi) * F(psi); }, 0.0, 2.0 * kPi, mcfg);
  } else {
    const quad::Rect rect{0.0, 2.0 * kPi, 0.0, length};
    auto inv_r = [&](double psi, double rho) {
      const double dz = c.z - rho;
      return 1.0 / std::sqrt(s2(psi) + dz * dz);
    };
    q[2] = quad::integrate_2d(inv_r, rect, cfg);
    const auto mcfg = moment_config(cfg, q[2].value);
    q[0] = quad::integrate_2d([&](double psi, double rho) { return std::sin(psi) * inv_r(psi, rho); }, rect, mcfg);
    q[1] = quad::integrate_2d([&](double psi, double rho) { return std::cos(psi) * inv_r(psi, rho); }, rect, mcfg);
  }
  PotentialResult out;
  out.A = from_cylindrical_components(-k * a * P * q[0].value, k * a * P * q[1].value, k * p * q[2].value, c.phi);
  out.diagnostics.absorb(q[0], k * a * P);
  out.diagnostics.absorb(q[1], k * a * P);
  out.diagnostics.absorb(q[2], k * p);
  return out;
}

PotentialResult curve_potential(const sources::CurveSource& src, const Point3& y, const quad::QuadConfig& cfg,
                                const MediumConstants& medium) {
  medium.validate();
  cfg.validate();
  // Integrand I₀ w W / R, one Cartesian component at a time.
  auto weight = [&](double s) {
    const Point3 x = src.position(s);
    const double r = distance(x, y);
    if (r <= 1e3 * kernels::coincidence_floor(x, y)) throw OnSupportError("field point on the wire");
    return src.density(s) * src.leray_density(s) / r;
  };
  const auto qn = quad::integrate_adaptive([&](double s) { return std::abs(weight(s)) * norm(src.direction(s)); },
                                           src.begin, src.end, cfg);
  const auto mcfg = moment_config(cfg, qn.value);
  const auto qx = quad::integrate_adaptive([&](double s) { return weight(s) * src.direction(s).x; }, src.begin, src.end, mcfg);
  const auto qy = quad::integrate_adaptive([&](double s) { return weight(s) * src.direction(s).y; }, src.begin, src.end, mcfg);
  const auto qz = quad::integrate_adaptive([&](double s) { return weight(s) * src.direction(s).z; }, src.begin, src.end, mcfg);
  const double k = medium.mu / (4.0 * kPi);
  PotentialResult out;
  out.A = k * Vec3{qx.value, qy.value, qz.value};
  out.diagnostics.absorb(qx, k);
  out.diagnostics.absorb(qy, k);
  out.diagnostics.absorb(qz, k);
  return out;
}

PotentialResult polyline_potential(const sources::Polyline& wire, const Point3& y, const quad::QuadConfig& cfg,
                                   const MediumConstants& medium) {
  PotentialResult out;
  for (const auto& piece : wire) out += curve_potential(piece, y, cfg, medium);
  return out;
}

PotentialResult surface_potential(const sources::SurfaceSource& src, const Point3& y, const quad::QuadConfig& cfg,
                                  const MediumConstants& medium) {
  medium.validate();
  cfg.validate();
  auto weight = [&](double s, double r) {
    const Point3 x = src.position(s, r);
    const double d = distance(x, y);
    if (d <= 1e3 * kernels::coincidence_floor(x, y)) throw OnSupportError("field point on the sheet");
    return src.density(s, r) * src.leray_density(s, r) / d;
  };
  const auto qn = quad::integrate_2d([&](double s, double r) { return std::abs(weight(s, r)) * norm(src.direction(s, r)); },
                                     src.chart, cfg);
  const auto mcfg = moment_config(cfg, qn.value);
  const auto qx = quad::integrate_2d([&](double s, double r) { return weight(s, r) * src.direction(s, r).x; }, src.chart, mcfg);
  const auto qy = quad::integrate_2d([&](double s, double r) { return weight(s, r) * src.direction(s, r).y; }, src.chart, mcfg);
  const auto qz = quad::integrate_2d([&](double s, double r) { return weight(s, r) * src.direction(s, r).z; }, src.chart, mcfg);
  const double k = medium.mu / (4.0 * kPi);
  PotentialResult out;
  out.A = k * Vec3{qx.value, qy.value, qz.value};
  out.diagnostics.absorb(qx, k);
  out.diagnostics.absorb(qy, k);
  out.diagnostics.absorb(qz, k);
  return out;
}

}  // namespace leray::fields
