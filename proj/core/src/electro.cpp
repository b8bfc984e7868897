#include "leray/electro.hpp"

#include <cmath>
#include <numbers>

#include "leray/errors.hpp"
#include "leray/kernels.hpp"

namespace leray::fields {

namespace {
constexpr double kPi = std::numbers::pi;
}

double plate_wire_log_sum(double q, double b, double c) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("plate-wire log sum needs 0 <= q <= 1");
  if (q == 1.0) {
    const double num = std::abs(std::sin(0.5 * (b + c)));
    const double den = std::abs(std::sin(0.5 * (b - c)));
    if (den == 0.0) throw OnSupportError("log sum is singular at b = c");
    return 0.5 * std::log(num / den);
  }
  // 1 - 2q cos θ + q² = (1 - q)² + 4q sin²(θ/2), free of cancellation.
  auto quadratic = [q](double theta) {
    const double s = std::sin(0.5 * theta);
    return (1.0 - q) * (1.0 - q) + 4.0 * q * s * s;
  };
  return 0.25 * std::log(quadratic(b + c) / quadratic(b - c));
}

PotentialResult plate_wire_potential(double z0, double line_charge, double L, const Point3& y,
                                     const quad::QuadConfig& cfg, const MediumConstants& medium) {
  if (!(L > 0.0) || !std::isfinite(L)) throw InvalidParameterError("plate separation must be positive");
  if (!(z0 > 0.0 && z0 < L)) throw InvalidParameterError("wire height must satisfy 0 < z0 < L");
  if (!std::isfinite(line_charge)) throw InvalidParameterError("line charge must be finite");
  if (!(y.z >= 0.0 && y.z <= L)) throw DomainError("field point outside the slab");
  medium.validate();
  cfg.validate();
  PotentialResult out;
  const double pref = line_charge / (medium.epsilon * kPi);
  const double b = kPi * z0 / L;
  const double c = kPi * y.z / L;
  if (y.z == 0.0 || y.z == L) return out;  // grounded plates
  const double ax = kPi * std::abs(y.x) / L;
  if (ax == 0.0) {
    if (y.z == z0) throw OnSupportError("field point on the charged wire");
    out.phi = pref * plate_wire_log_sum(1.0, b, c);
    return out;
  }
  auto term = [=](long n) {
    const double dn = static_cast<double>(n);
    return std::sin(dn * b) * std::sin(dn * c) * std::exp(-dn * ax) / dn;
  };
  auto envelope = [=](long n) {
    const double dn = static_cast<double>(n);
    return std::exp(-dn * ax) / dn;
  };
  const auto s = quad::sum_series(term, cfg, 1, 1'000'000, envelope);
  out.phi = pref * s.value;
  out.diagnostics.absorb(s, pref);
  if (!s.converged) out.diagnostics.note = "plate-wire series budget exhausted";
  return out;
}

PotentialResult dipole_potential(const sources::DipoleSource& dip, const Point3& y, const MediumConstants& medium) {
  medium.validate();
  const Vec3 d = y - dip.location;
  const double r = norm(d);
  if (r < kernels::coincidence_floor(y, dip.location)) throw CoincidentPointsError("field point on the dipole");
  PotentialResult out;
  out.phi = dot(dip.moment, d) / (4.0 * kPi * medium.epsilon * r * r * r);
  return out;
}

PotentialResult coulomb_potential(double charge, const Point3& x0, const Point3& y, const MediumConstants& medium) {
  medium.validate();
  PotentialResult out;
  out.phi = charge * kernels::free_kernel(x0, y) / medium.epsilon;
  return out;
}

}  // namespace leray::fields
