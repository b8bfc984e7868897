#pragma once

#include "leray/medium.hpp"
#include "leray/quad.hpp"
#include "leray/sources.hpp"

namespace leray::fields {

/// Line charge λ (C/m) along the y-axis direction at x = 0, z = z₀, between
/// grounded plates z = 0 and z = L:
///
///   φ = (λ/ε)(1/π) Σ (1/n) sin(nπz₀/L) sin(nπz/L) e^{-nπ|x|/L}
///
/// At x = 0 the series is replaced by its closed form
/// (λ/ε)(1/2π) ln|sin((b+c)/2) / sin((b-c)/2)|, b = πz₀/L, c = πz/L.
/// Independent of y. Throws DomainError for z outside [0, L] and
/// OnSupportError on the wire.
PotentialResult plate_wire_potential(double z0, double line_charge, double separation, const Point3& y,
                                     const quad::QuadConfig& cfg, const MediumConstants& medium = {});

/// Σ_{n>=1} (1/n) qⁿ sin(nb) sin(nc) = ¼ ln[(1 - 2q cos(b+c) + q²)/(1 - 2q cos(b-c) + q²)]
/// for 0 <= q <= 1 (q = 1 away from b = ±c).
double plate_wire_log_sum(double q, double b, double c);

/// Point dipole: φ = p·(y - x₀) / (4πε|y - x₀|³).
PotentialResult dipole_potential(const sources::DipoleSource& dip, const Point3& y, const MediumConstants& medium = {});

/// Static point charge: φ = q / (4πε|y - x₀|).
PotentialResult coulomb_potential(double charge, const Point3& x0, const Point3& y, const MediumConstants& medium = {});

}  // namespace leray::fields
