#include "leray/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "leray/errors.hpp"

namespace leray::special {

namespace {

// K₀(x) = Σ_k (x²/4)^k/(k!)² · (H_k - ln(x/2) - γ), H_0 = 0.
double k0_series(double x) {
  const double q = 0.25 * x * x;
  const double log_term = std::log(0.5 * x) + std::numbers::egamma;
  double coeff = 1.0;  // (x²/4)^k / (k!)²
  double harmonic = 0.0;
  double sum = -log_term;
  for (int k = 1; k < 60; ++k) {
    coeff *= q / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    const double term = coeff * (harmonic - log_term);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// e^x K₀(x) for x > 2 via Steed's algorithm on the second continued fraction
// (Temme's method at order 0).
double k0_scaled_cf(double x) {
  constexpr double kEps = 1e-16;
  constexpr double a1 = 0.25;  // 1/4 - ν² with ν = 0
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < 10000; ++i) {
    a -= 2.0 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  return std::sqrt(std::numbers::pi / (2.0 * x)) / s;
}

void require_positive(double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k0 requires x > 0");
}

}  // namespace

double bessel_k0(double x) {
  require_positive(x);
  if (x <= 2.0) return k0_series(x);
  if (x > 745.0) return 0.0;
  return k0_scaled_cf(x) * std::exp(-x);
}

double bessel_k0_scaled(double x) {
  require_positive(x);
  if (x <= 2.0) return k0_series(x) * std::exp(x);
  return k0_scaled_cf(x);
}

}  // namespace leray::special
