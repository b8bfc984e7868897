#include "leray/sources.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "leray/errors.hpp"

namespace leray::sources {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw InvalidParameterError(std::string(what) + " must be finite");
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidParameterError(std::string(what) + " must be positive");
}

void check_gradients(std::span<const Vec3> g, double tol) {
  for (const auto& gi : g) {
    const double n = norm(gi);
    if (!(n > 0.0) || !std::isfinite(n)) throw DegenerateFoliationError("foliation gradient vanishes");
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (std::abs(dot(g[i], g[j])) > tol * norm(g[i]) * norm(g[j]))
        throw DegenerateFoliationError("foliation gradients are not orthogonal");
}

// Components of a tangent vector v in the chart basis (t1, t2).
std::pair<double, double> chart_components(const Vec3& v, const Vec3& t1, const Vec3& t2) {
  const double g11 = dot(t1, t1), g12 = dot(t1, t2), g22 = dot(t2, t2);
  const double b1 = dot(t1, v), b2 = dot(t2, v);
  const double det = g11 * g22 - g12 * g12;
  if (!(det > 0.0)) throw DegenerateFoliationError("chart tangents are degenerate");
  return {(g22 * b1 - g12 * b2) / det, (g11 * b2 - g12 * b1) / det};
}

double curve_chart_component(const Vec3& w, const Vec3& tangent) {
  const double t2 = dot(tangent, tangent);
  if (!(t2 > 0.0)) throw DegenerateFoliationError("curve tangent vanishes");
  return dot(w, tangent) / t2;
}

void check_curve_domain(const CurveSource& src, double sigma) {
  if (!(sigma >= src.begin && sigma <= src.end))
    throw DomainError("chart parameter " + std::to_string(sigma) + " outside [" + std::to_string(src.begin) + ", " +
                      std::to_string(src.end) + "]");
}

void check_surface_domain(const SurfaceSource& src, double sigma, double rho) {
  const auto& c = src.chart;
  if (!(sigma >= c.sigma_lo && sigma <= c.sigma_hi && rho >= c.rho_lo && rho <= c.rho_hi))
    throw DomainError("chart point outside the surface chart");
}

// A unit vector orthogonal to d (|d| = 1).
Vec3 any_normal(const Vec3& d) {
  const Vec3 axis = std::abs(d.x) <= std::abs(d.y) && std::abs(d.x) <= std::abs(d.z) ? Vec3{1, 0, 0}
                    : std::abs(d.y) <= std::abs(d.z)                                   ? Vec3{0, 1, 0}
                                                                                       : Vec3{0, 0, 1};
  const Vec3 n = cross(d, axis);
  return n / norm(n);
}

}  // namespace

LerayForm leray_form_orthogonal(std::span<const Vec3> g, double tol) {
  check_gradients(g, tol);
  LerayForm out;
  switch (g.size()) {
    case 1: {
      const Vec3 v = g[0] / dot(g[0], g[0]);
      out.degree = 2;
      out.components = {v.x, v.y, v.z};
      break;
    }
    case 2: {
      const Vec3 v = cross(g[0], g[1]) / (dot(g[0], g[0]) * dot(g[1], g[1]));
      out.degree = 1;
      out.components = {v.x, v.y, v.z};
      break;
    }
    case 3: {
      const double det = dot(g[0], cross(g[1], g[2]));
      out.degree = 0;
      out.components = {det / (dot(g[0], g[0]) * dot(g[1], g[1]) * dot(g[2], g[2])), 0.0, 0.0};
      break;
    }
    default:
      throw InvalidParameterError("a foliation of R³ needs 1, 2 or 3 functions");
  }
  return out;
}

ChartWeight leray_weight_orthogonal(std::span<const Vec3> g, std::span<const Vec3> t, double tol) {
  const LerayForm form = leray_form_orthogonal(g, tol);
  if (t.size() != static_cast<std::size_t>(form.degree))
    throw InvalidParameterError("need one chart tangent per leaf dimension");
  const Vec3 v{form.components[0], form.components[1], form.components[2]};
  double s = 0.0;
  switch (form.degree) {
    case 0:
      s = form.components[0];
      break;
    case 1:
      s = dot(v, t[0]);
      break;
    case 2:
      s = dot(v, cross(t[0], t[1]));
      break;
  }
  if (s == 0.0) throw DegenerateFoliationError("chart tangents are not along the leaf");
  return {std::abs(s), s > 0.0 ? 1 : -1, s};
}

double line_current(const CurveSource& src, double sigma) {
  check_curve_domain(src, sigma);
  return src.density(sigma) * src.leray_density(sigma) * curve_chart_component(src.direction(sigma), src.tangent(sigma));
}

double line_current_from_leray(const CurveSource& src, double sigma, std::span<const double> gauge_shift) {
  check_curve_domain(src, sigma);
  if (!src.foliation_gradients) throw InvalidParameterError("curve carries no foliation description");
  const auto g = src.foliation_gradients(sigma);
  if (g.size() != 2) throw DegenerateFoliationError("a curve needs two foliation functions");
  if (gauge_shift.size() > g.size()) throw InvalidParameterError("more gauge shifts than foliation functions");
  const LerayForm form = leray_form_orthogonal(g);
  Vec3 omega{form.components[0], form.components[1], form.components[2]};
  // Orientation from the unshifted form; df_j terms vanish on the tangent anyway.
  const Vec3 tangent = src.tangent(sigma);
  const double along = dot(omega, tangent);
  if (along == 0.0) throw DegenerateFoliationError("Leray form vanishes on the curve tangent");
  const int orientation = along > 0.0 ? 1 : -1;
  for (std::size_t j = 0; j < gauge_shift.size(); ++j) omega += gauge_shift[j] * g[j];
  // i_W ω_f only sees the tangential part of W.
  const Vec3 w = curve_chart_component(src.direction(sigma), tangent) * tangent;
  return src.density(sigma) * orientation * dot(omega, w);
}

quad::QuadResult integrate_against(const CurveSource& src, const std::function<double(const Point3&)>& test,
                                   const quad::QuadConfig& cfg) {
  auto f = [&](double s) { return test(src.position(s)) * line_current(src, s) * src.leray_density(s); };
  return quad::integrate_adaptive(f, src.begin, src.end, cfg);
}

double helix_wavenumber(double radius, double pitch) {
  require_positive(radius, "radius");
  if (!(pitch >= 0.0 && pitch < 1.0)) throw InvalidParameterError("pitch must satisfy 0 <= p < 1 (a²P² + p² = 1)");
  return std::sqrt((1.0 - pitch) * (1.0 + pitch)) / radius;
}

CurveSource make_loop(double a, double current) {
  require_positive(a, "loop radius");
  require_finite(current, "current");
  CurveSource s;
  s.position = [a](double phi) { return Point3::from_cylindrical(a, phi, 0.0); };
  s.tangent = [a](double phi) { return a * azimuthal_unit(phi); };
  s.direction = [](double phi) { return azimuthal_unit(phi); };
  s.leray_density = [a](double) { return a; };
  s.density = [current](double) { return current; };
  s.foliation_gradients = [](double phi) { return std::vector<Vec3>{radial_unit(phi), Vec3{0, 0, 1}}; };
  s.begin = 0.0;
  s.end = kTwoPi;
  s.closed = true;
  return s;
}

CurveSource make_loop_arclength(double a, double current) {
  require_positive(a, "loop radius");
  require_finite(current, "current");
  CurveSource s;
  s.position = [a](double u) { return Point3::from_cylindrical(a, u / a, 0.0); };
  s.tangent = [a](double u) { return azimuthal_unit(u / a); };
  s.direction = [a](double u) { return azimuthal_unit(u / a); };
  s.leray_density = [](double) { return 1.0; };
  s.density = [current](double) { return current; };
  s.foliation_gradients = [a](double u) { return std::vector<Vec3>{radial_unit(u / a), Vec3{0, 0, 1}}; };
  s.begin = 0.0;
  s.end = kTwoPi * a;
  s.closed = true;
  return s;
}

CurveSource make_helix(double a, double p, double length, double current) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidParameterError("helix pitch must satisfy 0 < p < 1");
  const double P = helix_wavenumber(a, p);
  require_positive(length, "helix length");
  require_finite(current, "current");
  CurveSource s;
  s.position = [=](double u) { return Point3::from_cylindrical(a, P * u, p * u); };
  s.tangent = [=](double u) { return a * P * azimuthal_unit(P * u) + Vec3{0, 0, p}; };
  s.direction = s.tangent;
  // Ω_f = -r dφ on the helix: |Ω_f(∂σ)| = aP per unit arc length.
  s.leray_density = [=](double) { return a * P; };
  s.density = [=](double) { return current / (a * P); };
  // f = (r - a, z - (p/P) φ); ∇φ = ê_φ / r.
  s.foliation_gradients = [=](double u) {
    return std::vector<Vec3>{radial_unit(P * u), Vec3{0, 0, 1} - (p / (P * a)) * azimuthal_unit(P * u)};
  };
  s.begin = 0.0;
  s.end = length;
  s.closed = false;
  return s;
}

CurveSource make_segment(const Point3& from, const Point3& to, double current) {
  require_finite(current, "current");
  const Vec3 d = to - from;
  const double len = norm(d);
  if (!(len > 0.0) || !std::isfinite(len)) throw InvalidParameterError("segment endpoints coincide");
  const Vec3 u = d / len;
  const Vec3 n1 = any_normal(u);
  const Vec3 n2 = cross(u, n1);
  CurveSource s;
  s.position = [=](double t) { return from + t * d; };
  s.tangent = [=](double) { return d; };
  s.direction = [=](double) { return u; };
  s.leray_density = [=](double) { return len; };
  s.density = [=](double) { return current; };
  s.foliation_gradients = [=](double) { return std::vector<Vec3>{n1, n2}; };
  s.begin = 0.0;
  s.end = 1.0;
  s.closed = false;
  return s;
}

Polyline make_polyline(std::span<const Point3> v, double current, bool closed) {
  if (v.size() < 2) throw InvalidParameterError("polyline needs at least two vertices");
  Polyline out;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(make_segment(v[i], v[i + 1], current));
  if (closed) out.push_back(make_segment(v.back(), v.front(), current));
  return out;
}

double surface_current(const SurfaceSource& src, double sigma, double rho, const Vec3& u) {
  check_surface_domain(src, sigma, rho);
  const Vec3 ts = src.tangent_sigma(sigma, rho), tr = src.tangent_rho(sigma, rho);
  const auto [ws, wr] = chart_components(src.direction(sigma, rho), ts, tr);
  const auto [us, ur] = chart_components(u, ts, tr);
  return src.density(sigma, rho) * src.leray_density(sigma, rho) * (ws * ur - wr * us);
}

Vec3 surface_current_vector(const SurfaceSource& src, double sigma, double rho) {
  check_surface_domain(src, sigma, rho);
  const double jac = norm(cross(src.tangent_sigma(sigma, rho), src.tangent_rho(sigma, rho)));
  if (!(jac > 0.0)) throw DegenerateFoliationError("chart tangents are degenerate");
  return (src.density(sigma, rho) * src.leray_density(sigma, rho) / jac) * src.direction(sigma, rho);
}

double surface_current_from_leray(const SurfaceSource& src, double sigma, double rho, const Vec3& u,
                                  const Vec3& beta) {
  check_surface_domain(src, sigma, rho);
  if (!src.foliation_gradients) throw InvalidParameterError("surface carries no foliation description");
  const auto g = src.foliation_gradients(sigma, rho);
  if (g.size() != 1) throw DegenerateFoliationError("a surface needs one foliation function");
  const LerayForm form = leray_form_orthogonal(g);
  Vec3 omega{form.components[0], form.components[1], form.components[2]};
  const Vec3 ts = src.tangent_sigma(sigma, rho), tr = src.tangent_rho(sigma, rho);
  const double along = dot(omega, cross(ts, tr));
  if (along == 0.0) throw DegenerateFoliationError("Leray form vanishes on the chart tangents");
  const int orientation = along > 0.0 ? 1 : -1;
  omega += cross(g[0], beta);  // df ∧ β as a 2-form vector
  const auto [ws, wr] = chart_components(src.direction(sigma, rho), ts, tr);
  const Vec3 w = ws * ts + wr * tr;
  return src.density(sigma, rho) * orientation * dot(omega, cross(w, u));
}

SurfaceSource make_solenoid(double a, double p, double length, double kappa0) {
  const double P = helix_wavenumber(a, p);
  require_positive(length, "solenoid length");
  require_finite(kappa0, "kappa0");
  SurfaceSource s;
  s.position = [=](double phi, double z) { return Point3::from_cylindrical(a, phi, z); };
  s.tangent_sigma = [=](double phi, double) { return a * azimuthal_unit(phi); };
  s.tangent_rho = [](double, double) { return Vec3{0, 0, 1}; };
  s.direction = [=](double phi, double) { return a * P * azimuthal_unit(phi) + Vec3{0, 0, p}; };
  s.leray_density = [=](double, double) { return a; };  // Ω_f = r dφ∧dz
  s.density = [=](double, double) { return kappa0; };
  s.foliation_gradients = [](double phi, double) { return std::vector<Vec3>{radial_unit(phi)}; };
  s.chart = {0.0, kTwoPi, 0.0, length};
  return s;
}

PointSource make_uniform_charge(double q, const Point3& x0, const Vec3& v) {
  require_finite(q, "charge");
  PointSource s;
  s.charge = q;
  s.trajectory = [=](double t) { return x0 + t * v; };
  s.velocity = [=](double) { return v; };
  return s;
}

PointSource make_circular_charge(double q, const Point3& center, double radius, double omega) {
  require_finite(q, "charge");
  require_positive(radius, "orbit radius");
  require_finite(omega, "angular speed");
  PointSource s;
  s.charge = q;
  s.trajectory = [=](double t) { return center + Vec3{radius * std::cos(omega * t), radius * std::sin(omega * t), 0}; };
  s.velocity = [=](double t) {
    return radius * omega * Vec3{-std::sin(omega * t), std::cos(omega * t), 0};
  };
  return s;
}

}  // namespace leray::sources
