#pragma once

#include <functional>

#include "leray/exterior3.hpp"
#include "leray/medium.hpp"
#include "leray/quad.hpp"
#include "leray/sources.hpp"

namespace leray::fields {

using VectorPotential = std::function<Vec3(const Point3&, double t)>;
using ScalarPotential = std::function<double(const Point3&, double t)>;

exterior3::FormField as_one_form(const VectorPotential& a, bool time_dependent = false);
exterior3::FormField as_zero_form(const ScalarPotential& phi, bool time_dependent = false);

/// Step for differentiating a quadrature-valued field: rel_tol^{1/3}·scale.
double matched_step(double rel_tol, double scale);

/// b = #dA, read as a vector.
Vec3 derive_B(const exterior3::FormField& a, const Point3& y, double t = 0.0, exterior3::Step h = std::nullopt);
Vec3 derive_B(const VectorPotential& a, const Point3& y, double t = 0.0, exterior3::Step h = std::nullopt);

/// e = -dφ - Ȧ; `ht` is the time step for Ȧ (ignored when A is static).
Vec3 derive_E(const ScalarPotential& phi, const VectorPotential& a, const Point3& y, double t, exterior3::Step h,
              double ht, bool time_dependent);

struct Residual {
  double value = 0.0;     // the raw residual
  double scale = 0.0;     // local derivative scale it is measured against
  double relative = 0.0;  // |value| / scale (0 when both vanish)
};

/// Frobenius norm of the Cartesian Jacobian ∂_i A_j by central differences.
double derivative_scale(const VectorPotential& a, const Point3& y, double t, double h);

/// δA (Coulomb-gauge residual), relative to the Jacobian scale of A.
Residual gauge_residual(const VectorPotential& a, const Point3& y, double t = 0.0, exterior3::Step h = std::nullopt);

/// δA - εμ ∂φ/∂t, i.e. -(∇·A + εμ ∂φ/∂t).
Residual lorenz_residual(const ScalarPotential& phi, const VectorPotential& a, const Point3& y, double t,
                         const MediumConstants& medium, exterior3::Step h, double ht);

/// δb with b = #dA (nested differences, so use a larger h).
Residual divergence_b_residual(const VectorPotential& a, const Point3& y, double t, double h);

struct AmpereCheck {
  double circulation = 0.0;  // ∮ h·dl
  double enclosed = 0.0;     // linking number × Ĭ
  double residual = 0.0;     // |∮ h·dl - I| / max(|I|, 1)
  double error_estimate = 0.0;
  bool converged = true;
};

/// Integral form of dh = J on a closed circuit. The linking number of the
/// circuit with the source is supplied by the caller.
AmpereCheck ampere_residual(const sources::CurveSource& source, const sources::Polyline& circuit, int linking_number,
                            const std::function<Vec3(const Point3&)>& h_field, const quad::QuadConfig& cfg);

/// Regular N-gon circuit. It is closed, so
/// Ampère's law holds on it exactly. Centre c, in the plane spanned by the
/// orthonormal pair (e1, e2), counter-clockwise from e1 to e2.
sources::Polyline polygon_circuit(const Point3& centre, const Vec3& e1, const Vec3& e2, double radius, int sides);

/// Distance from y to the circle r = a, z = 0.
double distance_to_loop(double a, const Point3& y);
/// Distance from y to a curve source, by sampling then golden-section refinement.
double distance_to_curve(const sources::CurveSource& src, const Point3& y, int samples = 512);
/// Distance from y to the finite cylinder r = a, 0 <= z <= L (the sheet only).
double distance_to_cylinder(double a, double length, const Point3& y);

}  // namespace leray::fields
