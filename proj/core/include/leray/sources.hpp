#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "leray/geometry.hpp"
#include "leray/quad.hpp"

namespace leray::sources {

/// Leray form Ω_f of an orthogonal foliation, in Cartesian components with
/// the exterior3 basis order. Degree is 3 - k for k gradients.
struct LerayForm {
  int degree = 0;
  std::array<double, 3> components{};
};

/// Ω_f = ⋆(df₁ ∧ … ∧ df_k) / Π|df_j|² for mutually orthogonal gradients.
/// Throws DegenerateFoliationError for a zero gradient or when
/// |∇f_i·∇f_j| > tol·|∇f_i||∇f_j|.
LerayForm leray_form_orthogonal(std::span<const Vec3> gradients, double tol = 1e-10);

struct ChartWeight {
  double weight = 0.0;         // |Ω_f(chart tangents)|
  int orientation = 1;         // sign of Ω_f(chart tangents)
  double signed_weight = 0.0;  // Ω_f(chart tangents)
};

/// Leray measure per unit chart parameter(s) on the leaf through the point.
/// One tangent for curves (k = 2), two for surfaces (k = 1).
ChartWeight leray_weight_orthogonal(std::span<const Vec3> gradients, std::span<const Vec3> chart_tangents,
                                    double tol = 1e-10);

/// Current-carrying curve given by a chart σ ∈ [begin, end].
///
/// `leray_density` caches the oriented chart weight of Ω_f; `direction` is
/// the vector field W; `density` is I₀. The induced line current is
/// Ĭ = I₀ · i_W ω_f.
struct CurveSource {
  std::function<Point3(double)> position;
  std::function<Vec3(double)> tangent;
  std::function<Vec3(double)> direction;
  std::function<double(double)> leray_density;
  std::function<double(double)> density;
  // Gradients of the foliation functions on the curve; optional.
  std::function<std::vector<Vec3>(double)> foliation_gradients;
  double begin = 0.0;
  double end = 1.0;
  bool closed = false;
};

using Polyline = std::vector<CurveSource>;

/// Ĭ(σ) from the cached chart weight. Throws DomainError outside the chart.
double line_current(const CurveSource& src, double sigma);

/// Ĭ(σ) recomputed from the foliation: Ω_f is rebuilt from the gradients,
/// shifted by Σ_j gauge_shift[j]·df_j, and oriented so current flowing
/// towards increasing σ is positive.
double line_current_from_leray(const CurveSource& src, double sigma, std::span<const double> gauge_shift = {});

/// ∫_Σ ψ Ĭ ω_f over the chart.
quad::QuadResult integrate_against(const CurveSource& src, const std::function<double(const Point3&)>& test,
                                   const quad::QuadConfig& cfg);

/// Circle r = a, z = 0 with chart σ = φ ∈ [0, 2π], W the unit tangent.
CurveSource make_loop(double radius, double current);
/// Same circle with arc-length chart s ∈ [0, 2πa].
CurveSource make_loop_arclength(double radius, double current);
/// Helix (r = a, φ = Pσ, z = pσ), σ ∈ [0, length] arc length, a²P² + p² = 1.
CurveSource make_helix(double radius, double pitch, double length, double current);
/// Straight segment from → to, chart σ ∈ [0, 1].
CurveSource make_segment(const Point3& from, const Point3& to, double current);
/// Piecewise-straight wire through the vertices; `closed` adds the last edge.
Polyline make_polyline(std::span<const Point3> vertices, double current, bool closed);

/// P = √(1 - p²)/a; throws InvalidParameterError unless 0 <= p < 1, a > 0.
double helix_wavenumber(double radius, double pitch);

/// Current sheet over the chart rectangle; κ̆ = κ₀ · i_W(Ω_f restricted).
struct SurfaceSource {
  std::function<Point3(double, double)> position;
  std::function<Vec3(double, double)> tangent_sigma;
  std::function<Vec3(double, double)> tangent_rho;
  std::function<Vec3(double, double)> direction;
  std::function<double(double, double)> leray_density;
  std::function<double(double, double)> density;
  std::function<std::vector<Vec3>(double, double)> foliation_gradients;
  quad::Rect chart;
};

/// κ̆ evaluated on a unit tangent u of the sheet: the current (A/m) crossing
/// a curve with tangent u in the direction of W.
double surface_current(const SurfaceSource& src, double sigma, double rho, const Vec3& unit_tangent);

/// Sheet-current vector K with κ̆(u) = n̂·(K × u).
Vec3 surface_current_vector(const SurfaceSource& src, double sigma, double rho);

/// κ̆(u) recomputed from the foliation. `gauge_one_form` β shifts the
/// Leray 2-form by df ∧ β, which must not change the result.
double surface_current_from_leray(const SurfaceSource& src, double sigma, double rho, const Vec3& unit_tangent,
                                  const Vec3& gauge_one_form = {});

/// Cylinder r = a, 0 <= z <= length, chart (σ = φ, ρ = z), painted with
/// helical strokes W = aP ê_φ + p ẑ.
SurfaceSource make_solenoid(double radius, double pitch, double length, double kappa0);

/// Moving point charge.
struct PointSource {
  double charge = 0.0;
  std::function<Point3(double)> trajectory;
  std::function<Vec3(double)> velocity;
};

PointSource make_uniform_charge(double charge, const Point3& position_at_zero, const Vec3& velocity);
/// Circular orbit in the plane z = center.z, angular speed ω, phase 0 at t = 0.
PointSource make_circular_charge(double charge, const Point3& center, double radius, double angular_speed);

struct DipoleSource {
  Point3 location;
  Vec3 moment;
};

}  // namespace leray::sources
