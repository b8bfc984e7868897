#include "leray/kernels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "leray/bessel.hpp"
#include "leray/errors.hpp"

namespace leray::kernels {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

double checked_separation(const Point3& x, const Point3& y) {
  const double r = distance(x, y);
  if (r < coincidence_floor(x, y)) throw CoincidentPointsError("kernel evaluated at coincident points");
  return r;
}

}  // namespace

double coincidence_floor(const Point3& x, const Point3& y) {
  return 1e-12 * (1.0 + norm(x.as_vec()) + norm(y.as_vec()));
}

double free_kernel(const Point3& x, const Point3& y) { return 1.0 / (kFourPi * checked_separation(x, y)); }

double retarded_delay(const Point3& x, const Point3& y, double c) {
  if (!(c > 0.0)) throw InvalidParameterError("wave speed must be positive");
  return distance(x, y) / c;
}

std::complex<double> helmholtz_kernel(const Point3& x, const Point3& y, double omega, double c) {
  if (!(c > 0.0)) throw InvalidParameterError("wave speed must be positive");
  const double r = checked_separation(x, y);
  return std::polar(1.0 / (kFourPi * r), -omega * r / c);
}

PlateGreen::PlateGreen(double separation, long max_terms, double tol)
    : separation_(separation), max_terms_(max_terms), tol_(tol) {
  if (!(separation > 0.0)) throw InvalidParameterError("plate separation must be positive");
  if (max_terms < 1) throw InvalidParameterError("plate series needs max_terms >= 1");
  if (!(tol > 0.0)) throw InvalidParameterError("plate series tolerance must be positive");
}

quad::QuadResult PlateGreen::evaluate(const Point3& x, const Point3& y) const {
  const double L = separation_;
  if (!(x.z > 0.0 && x.z < L) || !(y.z > 0.0 && y.z < L))
    throw DomainError("plate_green arguments must lie strictly between the plates");
  const double rho = std::hypot(x.x - y.x, x.y - y.y);
  if (rho == 0.0 && x.z == y.z) throw CoincidentPointsError("plate_green evaluated at coincident points");
  if (rho == 0.0) throw NonConvergenceError("plate_green eigenmode series does not converge at zero transverse distance");

  const double k = std::numbers::pi / L;
  const auto bessel = [k, rho](long n) {
    const double arg = k * rho * static_cast<double>(n);
    return arg > 745.0 ? 0.0 : special::bessel_k0(arg);
  };
  const auto term = [&](long n) {
    const double nn = static_cast<double>(n);
    return std::sin(nn * k * x.z) * std::sin(nn * k * y.z) * bessel(n);
  };
  quad::QuadConfig cfg;
  cfg.abs_tol = tol_;
  cfg.rel_tol = 1e-15;
  quad::QuadResult r = quad::sum_series(term, cfg, 1, max_terms_, bessel);
  if (!r.converged) {
    std::ostringstream msg;
    msg << "plate_green series did not converge within " << max_terms_ << " terms (rho/L = " << rho / L << ")";
    throw NonConvergenceError(msg.str());
  }
  const double scale = 1.0 / (std::numbers::pi * L);
  r.value *= scale;
  r.error_estimate *= scale;
  return r;
}

double plate_green(const Point3& x, const Point3& y, const PlateGreen& cfg) { return cfg(x, y); }

}  // namespace leray::kernels
