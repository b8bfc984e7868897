#include "leray/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

#include "leray/errors.hpp"

namespace leray::quad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// Kronrod abscissae on [-1, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

Panel gauss_kronrod_15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::abs(half);

  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);

  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }

  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));

  const double value = resk * half;
  resabs *= abs_half;
  resasc *= abs_half;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > kTiny / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  if (!std::isfinite(value)) err = std::numeric_limits<double>::infinity();
  return {a, b, value, err};
}

struct ByError {
  bool operator()(const Panel& l, const Panel& r) const {
    if (l.error != r.error) return l.error < r.error;
    return l.a > r.a;
  }
};

// Plain adaptive integration of a finite interval without singular points.
QuadResult adapt(const Integrand& f, double a, double b, const QuadConfig& cfg) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
  Panel first = gauss_kronrod_15(f, a, b);
  out.evaluations = 15;
  heap.push(first);
  double total = first.value;
  double total_err = first.error;
  int subdivisions = 0;
  bool resolution_floor = false;

  while (total_err > cfg.target(total) && subdivisions < cfg.max_subdivisions) {
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (std::abs(worst.b - worst.a) <= 1e3 * kEps * std::max(std::abs(worst.a), std::abs(worst.b)) ||
        mid == worst.a || mid == worst.b) {
      resolution_floor = true;
      break;
    }
    heap.pop();
    const Panel left = gauss_kronrod_15(f, worst.a, mid);
    const Panel right = gauss_kronrod_15(f, mid, worst.b);
    out.evaluations += 30;
    ++subdivisions;
    heap.push(left);
    heap.push(right);
    // Recompute the totals from scratch occasionally to stop drift.
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    if (subdivisions % 64 == 0) {
      std::vector<Panel> panels;
      auto copy = heap;
      while (!copy.empty()) {
        panels.push_back(copy.top());
        copy.pop();
      }
      total = 0.0;
      total_err = 0.0;
      std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
      for (const auto& p : panels) {
        total += p.value;
        total_err += p.error;
      }
    }
  }

  // Final reduction in left-endpoint order so the result is independent of
  // heap internals.
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  out.value = 0.0;
  out.error_estimate = 0.0;
  for (const auto& p : panels) {
    out.value += p.value;
    out.error_estimate += p.error;
  }
  out.converged = std::isfinite(out.value) && out.error_estimate <= cfg.target(out.value);
  (void)resolution_floor;
  return out;
}

// Integral over [a, b] with a ball of radius eps removed around each
// singular point.
QuadResult excised(const Integrand& f, double a, double b, const std::vector<double>& singular, double eps,
                   const QuadConfig& cfg) {
  std::vector<std::pair<double, double>> pieces;
  double cursor = a;
  for (double s : singular) {
    const double lo = std::max(a, s - eps);
    const double hi = std::min(b, s + eps);
    if (lo > cursor) pieces.emplace_back(cursor, lo);
    cursor = std::max(cursor, hi);
  }
  if (cursor < b) pieces.emplace_back(cursor, b);

  QuadResult out;
  out.converged = true;
  QuadConfig piece_cfg = cfg;
  piece_cfg.abs_tol = cfg.abs_tol / static_cast<double>(std::max<std::size_t>(1, pieces.size()));
  for (const auto& [lo, hi] : pieces) {
    const QuadResult r = adapt(f, lo, hi, piece_cfg);
    out.value += r.value;
    out.error_estimate += r.error_estimate;
    out.evaluations += r.evaluations;
    out.converged = out.converged && r.converged;
  }
  return out;
}

// Aitken Δ² extrapolation of a sequence whose error shrinks geometrically.
double aitken(double s0, double s1, double s2) {
  const double d1 = s1 - s0;
  const double d2 = s2 - s1;
  const double denom = d2 - d1;
  if (denom == 0.0 || !std::isfinite(denom)) return s2;
  const double ratio = d2 / d1;
  if (!(std::abs(ratio) < 1.0)) return s2;
  return s2 - d2 * d2 / denom;
}

}  // namespace

void QuadConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw InvalidParameterError("quadrature tolerances must be positive");
  if (!(singularity_exclusion >= 0.0))
    throw InvalidParameterError("singularity exclusion radius must be non-negative");
  if (max_subdivisions < 1) throw InvalidParameterError("max_subdivisions must be >= 1");
}

double QuadConfig::target(double value) const { return std::max(abs_tol, rel_tol * std::abs(value)); }

QuadResult integrate_adaptive(const Integrand& f, double a, double b, const QuadConfig& cfg,
                              const std::vector<double>& singular_points) {
  cfg.validate();
  if (!(a < b)) throw DomainError("integrate_adaptive requires a < b");

  std::vector<double> singular;
  for (double s : singular_points) {
    if (s >= a && s <= b) singular.push_back(s);
  }
  std::sort(singular.begin(), singular.end());
  if (singular.empty()) return adapt(f, a, b, cfg);

  const double eps0 = cfg.singularity_exclusion > 0.0 ? cfg.singularity_exclusion : 1e-6 * (b - a);
  std::array<QuadResult, 4> level;
  for (int k = 0; k < 4; ++k) level[k] = excised(f, a, b, singular, eps0 / double(1 << k), cfg);

  const double first = aitken(level[0].value, level[1].value, level[2].value);
  const double second = aitken(level[1].value, level[2].value, level[3].value);

  QuadResult out;
  out.value = second;
  out.error_estimate = std::abs(second - first) + level[3].error_estimate;
  out.converged = true;
  for (const auto& r : level) {
    out.evaluations += r.evaluations;
    out.converged = out.converged && r.converged;
  }
  out.converged = out.converged && std::isfinite(out.value) && out.error_estimate <= cfg.target(out.value);
  return out;
}

QuadResult integrate_semi_infinite(const Integrand& f, double a, const QuadConfig& cfg) {
  const auto mapped = [&f, a](double t) {
    const double one_minus = 1.0 - t;
    const double x = a + t / one_minus;
    const double v = f(x);
    if (v == 0.0) return 0.0;
    return v / (one_minus * one_minus);
  };
  return integrate_adaptive(mapped, 0.0, 1.0, cfg);
}

QuadResult integrate_periodic(const Integrand& f, double period, int n_points, const QuadConfig& cfg) {
  if (n_points < 8) throw InvalidParameterError("integrate_periodic needs at least 8 points");
  if (!(period > 0.0)) throw InvalidParameterError("period must be positive");
  const double h = period / (2.0 * n_points);
  double even = 0.0;
  double odd = 0.0;
  for (int k = 0; k < 2 * n_points; ++k) {
    const double v = f(k * h);
    if (k % 2 == 0)
      even += v;
    else
      odd += v;
  }
  QuadResult out;
  const double coarse = even * 2.0 * h;
  out.value = (even + odd) * h;
  out.error_estimate = std::abs(out.value - coarse);
  out.evaluations = 2L * n_points;
  out.converged = std::isfinite(out.value) && out.error_estimate <= cfg.target(out.value);
  return out;
}

QuadResult integrate_periodic_refined(const Integrand& f, double period, const QuadConfig& cfg, int n_start,
                                      int n_max) {
  if (n_start < 8) throw InvalidParameterError("integrate_periodic needs at least 8 points");
  if (!(period > 0.0)) throw InvalidParameterError("period must be positive");
  // sum holds Σ f over the current n-point grid.
  int n = n_start;
  double h = period / n;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += f(k * h);
  QuadResult out;
  out.evaluations = n;
  double coarse = sum * h;
  while (true) {
    double odd = 0.0;
    for (int k = 0; k < n; ++k) odd += f((k + 0.5) * h);
    out.evaluations += n;
    sum += odd;
    n *= 2;
    h *= 0.5;
    const double fine = sum * h;
    out.value = fine;
    out.error_estimate = std::abs(fine - coarse);
    out.converged = std::isfinite(fine) && out.error_estimate <= cfg.target(fine);
    if (out.converged || 2 * n > n_max || !std::isfinite(fine)) break;
    coarse = fine;
  }
  return out;
}

QuadResult integrate_2d(const Integrand2D& f, const Rect& rect, const QuadConfig& cfg) {
  cfg.validate();
  if (!(rect.sigma_lo < rect.sigma_hi) || !(rect.rho_lo < rect.rho_hi))
    throw DomainError("integrate_2d requires a non-degenerate rectangle");

  const double outer_len = rect.sigma_hi - rect.sigma_lo;
  QuadConfig inner_cfg = cfg;
  inner_cfg.abs_tol = cfg.abs_tol / (4.0 * outer_len);
  inner_cfg.rel_tol = cfg.rel_tol / 4.0;

  long inner_evals = 0;
  double worst_inner_err = 0.0;
  bool inner_ok = true;
  const auto outer = [&](double sigma) {
    const QuadResult r = integrate_adaptive([&](double rho) { return f(sigma, rho); }, rect.rho_lo, rect.rho_hi,
                                            inner_cfg);
    inner_evals += r.evaluations;
    worst_inner_err = std::max(worst_inner_err, r.error_estimate);
    inner_ok = inner_ok && r.converged;
    return r.value;
  };
  QuadResult out = integrate_adaptive(outer, rect.sigma_lo, rect.sigma_hi, cfg);
  out.evaluations = inner_evals;
  out.error_estimate += outer_len * worst_inner_err;
  out.converged = out.converged && inner_ok && out.error_estimate <= cfg.target(out.value);
  return out;
}

QuadResult sum_series(const SeriesTerm& term, const QuadConfig& cfg, long first, long max_terms,
                      const SeriesTerm& envelope) {
  cfg.validate();
  if (max_terms < 1) throw InvalidParameterError("sum_series needs max_terms >= 1");

  double sum = 0.0;
  double compensation = 0.0;
  int quiet = 0;
  bool stopped = false;
  // Ring buffer of the last six bounds for the tail estimate.
  std::array<double, 6> recent{};
  long count = 0;
  long n = first;

  // Tail beyond the current index, extrapolated from the last six bounds
  // (geometric or algebraic decay, whichever predicts less).
  auto tail_estimate = [&]() {
    double last = 0.0;
    double prev = 0.0;
    if (count >= 6) {
      for (long k = 0; k < 3; ++k) last = std::max(last, recent[(count - 1 - k) % 6]);
      for (long k = 3; k < 6; ++k) prev = std::max(prev, recent[(count - 1 - k) % 6]);
    } else {
      for (long k = 0; k < std::min<long>(count, 6); ++k) last = std::max(last, recent[k]);
    }
    if (last == 0.0) return 0.0;
    double tail = std::numeric_limits<double>::infinity();
    if (prev > 0.0 && last < prev) {
      const double r = std::pow(last / prev, 1.0 / 3.0);
      tail = std::min(tail, last * r / (1.0 - r));
      const double nn = static_cast<double>(n);
      const double s_exp = std::log(prev / last) / std::log(nn / std::max(1.0, nn - 3.0));
      if (s_exp > 1.0) tail = std::min(tail, last * nn / (s_exp - 1.0));
    }
    if (!std::isfinite(tail)) tail = last * static_cast<double>(std::max<long>(count, 1));
    return tail;
  };

  while (count < max_terms) {
    const double t = term(n);
    const double bound = envelope ? std::abs(envelope(n)) : std::abs(t);
    // Kahan summation; the slow series need it.
    const double y = t - compensation;
    const double s = sum + y;
    compensation = (s - sum) - y;
    sum = s;
    recent[count % 6] = bound;
    ++count;
    ++n;
    quiet = bound <= cfg.target(sum) ? quiet + 1 : 0;
    // Three quiet indices end the sum once the projected tail agrees.
    if (quiet >= 3 && tail_estimate() <= cfg.target(sum)) {
      stopped = true;
      break;
    }
  }

  QuadResult out;
  out.value = sum;
  out.evaluations = count;
  out.error_estimate = tail_estimate();
  out.converged = stopped && std::isfinite(sum) && out.error_estimate <= cfg.target(sum);
  return out;
}

}  // namespace leray::quad
