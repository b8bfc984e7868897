#pragma once

// Reference values computed along routes that share no code with the
// evaluators they check: direct Biot–Savart sums, closed-form elliptic ring
// fields, the raw k-space form of the plate Green function, and textbook
// closed forms.

#include "leray/geometry.hpp"

namespace leray::oracles {

/// B at y from a circular loop (radius a, z = 0, current I about +z) by the
/// midpoint Biot–Savart sum over `segments` straight elements.
Vec3 biot_savart_loop(double a, double current, const Point3& y, long segments, double mu);

/// μI a² / (2 (a² + z²)^{3/2}).
double loop_axis_field(double a, double current, double z, double mu);

/// Exact field of a ring (radius a, height z_ring, current I) from complete
/// elliptic integrals.
Vec3 ring_field(double a, double z_ring, double current, const Point3& y, double mu);

/// Stack of `rings` equal rings carrying K·length/rings each, at the
/// midpoints of equal slices of [0, length].
Vec3 ring_stack_field(double a, double length, double sheet_current, int rings, const Point3& y, double mu);

/// Plate Green function from the unreduced k-space double integral
///
///   G = (2/(4π²L)) Σ_n sin(nπz/L) sin(nπz'/L) ∫∫ e^{ik·ρ} / (k² + (nπ/L)²) d²k,
///
/// with both k-integrals done by composite Gauss–Legendre quadrature and an
/// integration-by-parts tail for the slowly decaying inner integral.
double plate_green_kspace(const Point3& x, const Point3& y, double separation);

/// Closed form of (1/π) Σ (1/n) qⁿ sin(nb) sin(nc), q = e^{-π|x|/L}.
double plate_wire_closed_form(double z0, double z, double x, double separation);

/// Potential of a charge q moving with constant velocity v ex, evaluated in
/// closed form (boosted Coulomb field); the charge is at the origin at t = 0.
double boosted_coulomb(double q, double v, const Point3& y, double t, double epsilon, double c);

/// Retarded time by plain bisection, for a charge moving with constant
/// velocity v ex from the origin at t = 0.
double retarded_time_bisection(double v, const Point3& y, double t, double c);

}  // namespace leray::oracles
