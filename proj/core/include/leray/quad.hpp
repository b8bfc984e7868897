#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace leray::quad {

using Integrand = std::function<double(double)>;
using Integrand2D = std::function<double(double, double)>;
using SeriesTerm = std::function<double(long)>;

struct QuadConfig {
  double abs_tol = 1e-13;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  // Half-width of the excluded neighbourhood around a declared singular
  // parameter. Zero selects an automatic starting width.
  double singularity_exclusion = 0.0;

  /// Throws InvalidParameterError unless tolerances > 0 and exclusion >= 0.
  void validate() const;
  double target(double value) const;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Globally adaptive bisection with the 15-point Kronrod / 7-point Gauss pair.
///
/// `singular_points` lists parameters in [a, b] where f may blow up
/// integrably. Each is excised with a ball of radius ε, ε/2, ε/4 and the
/// three truncated integrals are extrapolated to ε → 0.
QuadResult integrate_adaptive(const Integrand& f, double a, double b, const QuadConfig& cfg,
                              const std::vector<double>& singular_points = {});

/// ∫_a^∞ f via the map x = a + t/(1-t) onto [0, 1).
QuadResult integrate_semi_infinite(const Integrand& f, double a, const QuadConfig& cfg);

/// Trapezoid rule over one period using n and 2n points; value is the 2n sum
/// and the error estimate is their difference.
QuadResult integrate_periodic(const Integrand& f, double period, int n_points,
                              const QuadConfig& cfg = {});

/// Doubles the periodic trapezoid rule from `n_start` points until the
/// estimate meets the tolerance or `n_max` is exceeded.
QuadResult integrate_periodic_refined(const Integrand& f, double period, const QuadConfig& cfg,
                                      int n_start = 32, int n_max = 1 << 20);

struct Rect {
  double sigma_lo = 0.0;
  double sigma_hi = 1.0;
  double rho_lo = 0.0;
  double rho_hi = 1.0;
};

/// Iterated quadrature: outer adaptive in σ, inner adaptive in ρ.
/// The inner integrals run at a tolerance tightened by the outer length.
QuadResult integrate_2d(const Integrand2D& f, const Rect& rect, const QuadConfig& cfg);

/// Partial sums Σ_{n >= first} term(n), stopping after three consecutive
/// indices whose magnitude bound falls below cfg.target(|partial sum|), or
/// after `max_terms` terms.
///
/// `envelope(n)`, when given, must bound |term(n)| and be eventually
/// monotone; it drives the stopping rule and the tail estimate so that
/// isolated zero terms cannot end the summation early. Without it the
/// terms themselves are used. The error estimate extrapolates the tail from
/// the local decay of the bound (geometric or algebraic, whichever is
/// smaller).
QuadResult sum_series(const SeriesTerm& term, const QuadConfig& cfg, long first = 1,
                      long max_terms = 1'000'000, const SeriesTerm& envelope = {});

}  // namespace leray::quad
