#include "leray/app/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace leray::oracles {

namespace {

constexpr double kPi = std::numbers::pi;

// 10-point Gauss–Legendre on [-1, 1] (symmetric half).
constexpr double kGlX[5] = {0.1488743389816312108848260, 0.4333953941292471907992659, 0.6794095682990244062343274,
                            0.8650633666889845107320967, 0.9739065285171717200779640};
constexpr double kGlW[5] = {0.2955242247147528701738930, 0.2692667193099963550912269, 0.2190863625159820439955349,
                            0.1494513491505805931457763, 0.0666713443086881375935688};

template <class F>
double gauss_legendre(const F& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  double s = 0.0;
  for (int i = 0; i < 5; ++i) s += kGlW[i] * (f(c - h * kGlX[i]) + f(c + h * kGlX[i]));
  return s * h;
}

// ∫_0^upper f with panels no wider than half an oscillation period π/s and
// no wider than half the local scale (k + b): graded near the origin.
template <class F>
double graded_panels(const F& f, double upper, double s, double b) {
  double total = 0.0;
  double k = 0.0;
  while (k < upper) {
    const double w = std::min(kPi / s, 0.5 * (k + b));
    const double hi = std::min(k + w, upper);
    total += gauss_legendre(f, k, hi);
    k = hi;
  }
  return total;
}

// ∫_0^∞ cos(ks) / (k² + b²) dk, numerically to K = 2πM/s, plus the
// two-term integration-by-parts tail (valid because sin(Ks) = 0, cos(Ks) = 1).
double inner_cosine_integral(double b, double s) {
  constexpr int kPeriods = 40;
  const double K = 2.0 * kPi * kPeriods / s;
  const double head = graded_panels([&](double k) { return std::cos(k * s) / (k * k + b * b); }, K, s, b);
  const double q = K * K + b * b;
  const double tail = 2.0 * K / (s * s * q * q) - 24.0 * K * (K * K - b * b) / (s * s * s * s * q * q * q * q);
  return head + tail;
}

}  // namespace

Vec3 biot_savart_loop(double a, double current, const Point3& y, long segments, double mu) {
  const double dphi = 2.0 * kPi / static_cast<double>(segments);
  Vec3 sum;
  for (long k = 0; k < segments; ++k) {
    const double phi = (static_cast<double>(k) + 0.5) * dphi;
    const Point3 x{a * std::cos(phi), a * std::sin(phi), 0.0};
    const Vec3 dl{-a * std::sin(phi) * dphi, a * std::cos(phi) * dphi, 0.0};
    const Vec3 r = y - x;
    const double rn = norm(r);
    sum += cross(dl, r) / (rn * rn * rn);
  }
  return (mu * current / (4.0 * kPi)) * sum;
}

double loop_axis_field(double a, double current, double z, double mu) {
  return mu * current * a * a / (2.0 * std::pow(a * a + z * z, 1.5));
}

Vec3 ring_field(double a, double z_ring, double current, const Point3& y, double mu) {
  const double r = std::hypot(y.x, y.y);
  const double dz = y.z - z_ring;
  const double plus = (a + r) * (a + r) + dz * dz;
  const double minus = (a - r) * (a - r) + dz * dz;
  const double k = std::sqrt(4.0 * a * r / plus);
  const double K = std::comp_ellint_1(k);
  const double E = std::comp_ellint_2(k);
  const double pre = mu * current / (2.0 * kPi * std::sqrt(plus));
  const double bz = pre * (K + (a * a - r * r - dz * dz) / minus * E);
  if (r < 1e-12 * a) return {0.0, 0.0, bz};
  const double br = pre * dz / r * (-K + (a * a + r * r + dz * dz) / minus * E);
  return {br * y.x / r, br * y.y / r, bz};
}

Vec3 ring_stack_field(double a, double length, double sheet_current, int rings, const Point3& y, double mu) {
  const double slice = length / rings;
  Vec3 b;
  for (int j = 0; j < rings; ++j) b += ring_field(a, (j + 0.5) * slice, sheet_current * slice, y, mu);
  return b;
}

double plate_green_kspace(const Point3& x, const Point3& y, double L) {
  // Rotate the in-plane offset onto the diagonal so neither k-integral is
  // trivial: k·ρ = (k_x + k_y) s with s = ρ/√2.
  const double rho = std::hypot(x.x - y.x, x.y - y.y);
  const double s = rho / std::sqrt(2.0);
  double total = 0.0;
  for (int n = 1;; ++n) {
    const double m = n * kPi / L;
    if (m * rho > 40.0) break;
    // Outer integrand decays like e^{-√(k_x² + m²) s}; stop where bs = 40.
    const double kx_max = std::sqrt(std::max((40.0 / s) * (40.0 / s) - m * m, 0.0));
    auto outer = [&](double kx) { return std::cos(kx * s) * inner_cosine_integral(std::sqrt(kx * kx + m * m), s); };
    // e^{ik·ρ} → cos(k_x s) cos(k_y s) after dropping odd parts; 4 quadrants.
    const double kint = 4.0 * graded_panels(outer, kx_max, s, m);
    total += std::sin(m * x.z) * std::sin(m * y.z) * kint;
  }
  return 2.0 / (4.0 * kPi * kPi * L) * total;
}

double plate_wire_closed_form(double z0, double z, double x, double L) {
  const double q = std::exp(-kPi * std::abs(x) / L);
  const double b = kPi * z0 / L, c = kPi * z / L;
  const double num = 1.0 - 2.0 * q * std::cos(b + c) + q * q;
  const double den = 1.0 - 2.0 * q * std::cos(b - c) + q * q;
  return std::log(num / den) / (4.0 * kPi);
}

double boosted_coulomb(double q, double v, const Point3& y, double t, double epsilon, double c) {
  const double dx = y.x - v * t;
  const double beta2 = (v / c) * (v / c);
  return q / (4.0 * kPi * epsilon) / std::sqrt(dx * dx + (1.0 - beta2) * (y.y * y.y + y.z * y.z));
}

double retarded_time_bisection(double v, const Point3& y, double t, double c) {
  auto g = [&](double tp) { return tp - t + std::hypot(y.x - v * tp, y.y, y.z) / c; };
  const double span = 2.0 * (std::hypot(y.x, y.y, y.z) + std::abs(v * t)) / (c - std::abs(v)) + 1e-30;
  double lo = t - span, hi = t;
  for (int i = 0; i < 400 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace leray::oracles
