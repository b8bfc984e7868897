#pragma once

#include <complex>

#include "leray/geometry.hpp"
#include "leray/quad.hpp"

namespace leray::kernels {

/// Guard used by the singular kernels: |x-y| below this is "coincident".
double coincidence_floor(const Point3& x, const Point3& y);

/// Scalar coefficient of the fundamental double-forms on R³: 1/(4π|x-y|).
/// Throws CoincidentPointsError inside the coincidence floor.
double free_kernel(const Point3& x, const Point3& y);

/// |x-y|/c.
double retarded_delay(const Point3& x, const Point3& y, double c);

/// Outgoing-wave kernel e^{-iω|x-y|/c} / (4π|x-y|).
std::complex<double> helmholtz_kernel(const Point3& x, const Point3& y, double omega, double c);

/// Dirichlet Green function of -∇² for the slab 0 < z < L between two
/// grounded plates:
///
///   G(X, Y) = 1/(πL) Σ_{n>=1} sin(nπz/L) sin(nπz'/L) K₀(nπρ/L)
///
/// with ρ the distance between the (x, y) projections. Each n-term is the
/// eigenmode sum with its transverse k-integral done in closed form.
class PlateGreen {
 public:
  explicit PlateGreen(double separation, long max_terms = 1'000'000, double tol = 1e-16);

  double separation() const { return separation_; }

  /// Value with series diagnostics. Throws DomainError outside the open slab
  /// and NonConvergenceError when the series budget runs out (ρ → 0).
  quad::QuadResult evaluate(const Point3& x, const Point3& y) const;

  double operator()(const Point3& x, const Point3& y) const { return evaluate(x, y).value; }

 private:
  double separation_;
  long max_terms_;
  double tol_;
};

double plate_green(const Point3& x, const Point3& y, const PlateGreen& cfg);

}  // namespace leray::kernels
