#pragma once

#include "leray/medium.hpp"
#include "leray/quad.hpp"
#include "leray/sources.hpp"

namespace leray::fields {

/// Circular loop of radius a in z = 0 centred on the axis, current I
/// counter-clockwise about +z:
///
///   A_φ(r, z) = (μI/4π) ∫₀^{2π} a cos Ψ / √(r² + a² + z² - 2ar cos Ψ) dΨ
///
/// integrated with the refined periodic trapezoid rule. Throws
/// OnSupportError within 1e-9·a of the wire.
PotentialResult loop_potential(double a, double current, const Point3& y, const quad::QuadConfig& cfg,
                               const MediumConstants& medium = {});

/// Helix r = a, φ = Pσ, z = pσ, σ ∈ [0, L] (arc length), current I along
/// increasing σ. Cylindrical components at Y = (r, φ, z):
///
///   A_r = -(μI aP/4π) ∫ sin(Pσ - φ)/R dσ
///   A_φ =  (μI aP/4π) ∫ cos(Pσ - φ)/R dσ
///   A_z =  (μI p /4π) ∫ dσ/R
///   R²  = r² + a² + z² + σ²p² - 2zpσ - 2ar cos(Pσ - φ)
///
/// Throws InvalidParameterError unless 0 < p < 1.
PotentialResult helix_potential(double a, double p, double length, double current, const Point3& y,
                                const quad::QuadConfig& cfg, const MediumConstants& medium = {});

enum class SolenoidMethod {
  closed_inner,  // ρ-integral by its asinh antiderivative, σ adaptive
  numeric_2d,    // both integrals by iterated adaptive quadrature
};

/// Cylinder r = a, 0 <= z <= L₀ carrying the sheet current κ₀ W with
/// W = aP ê_φ + p ẑ:
///
///   A = (μκ₀a/4π) ∫₀^{2π} ∫₀^{L₀} (aP ê_φ(σ) + p ẑ) / R dρ dσ
///   R² = r² + a² - 2ar cos(σ - φ) + (z - ρ)²
///
/// Throws OnSupportError on the sheet.
PotentialResult solenoid_potential(double a, double p, double length, double kappa0, const Point3& y,
                                   const quad::QuadConfig& cfg, const MediumConstants& medium = {},
                                   SolenoidMethod method = SolenoidMethod::closed_inner);

/// A = (μ/4π) ∫ I₀ W ω_f / R for any curve source.
PotentialResult curve_potential(const sources::CurveSource& src, const Point3& y, const quad::QuadConfig& cfg,
                                const MediumConstants& medium = {});

PotentialResult polyline_potential(const sources::Polyline& wire, const Point3& y, const quad::QuadConfig& cfg,
                                   const MediumConstants& medium = {});

/// A = (μ/4π) ∫∫ κ₀ W ω_f / R over the chart of a surface source.
PotentialResult surface_potential(const sources::SurfaceSource& src, const Point3& y, const quad::QuadConfig& cfg,
                                  const MediumConstants& medium = {});

}  // namespace leray::fields
