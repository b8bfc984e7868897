#include "leray/app/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "leray/app/oracles.hpp"
#include "leray/errors.hpp"

namespace leray::selfcheck {

namespace {

constexpr double kPi = std::numbers::pi;
using Clock = std::chrono::steady_clock;

double rel_err(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

quad::QuadConfig tight() {
  quad::QuadConfig c;
  c.rel_tol = 1e-12;
  c.abs_tol = 1e-30;
  return c;
}

CheckResult finish(int id, std::string name, double metric, double tol, double budget, Clock::time_point start,
                   std::string detail, bool extra_ok = true) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  r.metric = metric;
  r.tolerance = tol;
  r.budget = budget;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.detail = std::move(detail);
  r.passed = extra_ok && std::isfinite(metric) && metric <= tol && (budget <= 0.0 || r.seconds < budget);
  return r;
}

template <class F>
CheckResult guarded(int id, const char* name, double tol, double budget, F&& body) {
  const auto start = Clock::now();
  try {
    return body(start);
  } catch (const std::exception& e) {
    return finish(id, name, std::numeric_limits<double>::infinity(), tol, budget, start,
                  std::string("exception: ") + e.what(), false);
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v;
  return os.str();
}

}  // namespace

CheckResult coulomb_limit(const Evaluators& ev) {
  return guarded(1, "coulomb-limit", 1e-12, 1.0, [&](Clock::time_point start) {
    const MediumConstants vac;
    const auto src = sources::make_uniform_charge(1.0, Point3{}, Vec3{});
    std::mt19937_64 rng(1001);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    double worst = 0.0;
    for (int k = 0; k < 20;) {
      const Point3 y{u(rng), u(rng), u(rng)};
      const double r = std::hypot(y.x, y.y, y.z);
      if (r < 0.1) continue;
      const double t = u(rng) * 1e-8;
      const auto lw = ev.lienard_wiechert(src, y, t, vac, 1e-12);
      const double oracle = 1.0 / (4.0 * kPi * constants::epsilon0 * r);
      worst = std::max({worst, rel_err(lw.phi, oracle), norm(lw.A)});
      ++k;
    }
    return finish(1, "coulomb-limit", worst, 1e-12, 1.0, start, "20 random points, q = 1 C at rest");
  });
}

CheckResult loop_on_axis(const Evaluators& ev) {
  return guarded(2, "loop-on-axis", 1e-5, 5.0, [&](Clock::time_point start) {
    const double a = 1.0, I = 1.0;
    const auto cfg = tight();
    double worst = 0.0, worst_closed = 0.0;
    for (double zr : {0.0, 0.5, 1.0, 2.0, 5.0}) {
      const Point3 y{0.0, 0.0, zr * a};
      const double h = fields::matched_step(cfg.rel_tol, std::hypot(a, zr * a));
      auto A = [&](const Point3& p, double) { return ev.loop_potential(a, I, p, cfg).A; };
      const Vec3 B = fields::derive_B(A, y, 0.0, h);
      const Vec3 bs = oracles::biot_savart_loop(a, I, y, 1'000'000, constants::mu0);
      worst = std::max(worst, rel_err(B.z, bs.z));
      worst_closed = std::max(worst_closed, rel_err(B.z, oracles::loop_axis_field(a, I, zr * a, constants::mu0)));
    }
    return finish(2, "loop-on-axis", worst, 1e-5, 5.0, start,
                  "z/a in {0,0.5,1,2,5} vs 1e6-segment Biot-Savart; vs closed form " + fmt(worst_closed));
  });
}

CheckResult helix_to_loop(const Evaluators& ev) {
  return guarded(3, "helix-to-loop", 1e-3, 10.0, [&](Clock::time_point start) {
    const double a = 1.0, I = 1.0, p = 1e-3;
    const double P = sources::helix_wavenumber(a, p);
    const double L = 2.0 * kPi / P;  // one turn
    const double zbar = 0.5 * p * L;
    quad::QuadConfig cfg;
    cfg.rel_tol = 1e-10;
    cfg.abs_tol = 1e-22;
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const double r = 0.2 + 0.3 * k;
      if (std::abs(r - a) < 0.05) continue;
      const double phi = 0.7 * k - 3.0;
      const Point3 y = Point3::from_cylindrical(r, phi, zbar);
      const auto h = fields::helix_potential(a, p, L, I, y, cfg);
      const auto l = ev.loop_potential(a, I, Point3::from_cylindrical(r, phi, 0.0), cfg);
      const Vec3 e = azimuthal_unit(phi);
      worst = std::max(worst, rel_err(dot(h.A, e), dot(l.A, e)));
    }
    return finish(3, "helix-to-loop", worst, 1e-3, 10.0, start,
                  "one turn, p = 1e-3, A_phi at 10 points in the turn's mean plane");
  });
}

CheckResult long_solenoid(const Evaluators&) {
  return guarded(4, "long-solenoid", 1e-2, 30.0, [&](Clock::time_point start) {
    const double a = 1.0, L0 = 100.0 * a, kappa0 = 1.0;
    const auto sheet = sources::make_solenoid(a, 0.0, L0, kappa0);
    const double K = sources::surface_current(sheet, kPi, 0.5 * L0, Vec3{0, 0, 1});
    quad::QuadConfig cfg;
    cfg.rel_tol = 1e-10;
    cfg.abs_tol = 1e-22;
    auto A = [&](const Point3& q, double) { return fields::solenoid_potential(a, 0.0, L0, kappa0, q, cfg).A; };
    const Point3 centre{0.0, 0.0, 0.5 * L0};
    const Point3 outside{10.0 * a, 0.0, 0.5 * L0};
    const Vec3 b_in = fields::derive_B(A, centre, 0.0, fields::matched_step(cfg.rel_tol, a));
    const Vec3 b_out = fields::derive_B(A, outside, 0.0, fields::matched_step(cfg.rel_tol, 9.0 * a));
    const Vec3 s_in = oracles::ring_stack_field(a, L0, K, 200, centre, constants::mu0);
    const Vec3 s_out = oracles::ring_stack_field(a, L0, K, 200, outside, constants::mu0);
    const double ideal = constants::mu0 * K;
    const double err_ideal = rel_err(b_in.z, ideal);
    const double err_stack = rel_err(b_in.z, s_in.z);
    const double ratio = norm(b_out) / std::abs(b_in.z);
    const double ratio_stack = norm(s_out) / std::abs(s_in.z);
    const bool exterior_ok = ratio < 1e-2 && ratio_stack < 1e-2;
    return finish(4, "long-solenoid", std::max(err_ideal, err_stack), 1e-2, 30.0, start,
                  "B_z(centre) vs mu0*K " + fmt(err_ideal) + ", vs 200-ring stack " + fmt(err_stack) +
                      "; |B(10a)|/B_in = " + fmt(ratio) + " (stack " + fmt(ratio_stack) + ")",
                  exterior_ok);
  });
}

CheckResult plate_green_kspace(const Evaluators& ev) {
  return guarded(5, "plate-green-kspace", 1e-6, 10.0, [&](Clock::time_point start) {
    const double L = 1.0;
    const Point3 pairs[5][2] = {{{0.0, 0.0, 0.3}, {0.4, 0.1, 0.6}},
                                {{0.2, -0.1, 0.5}, {-0.3, 0.3, 0.45}},
                                {{0.0, 0.0, 0.1}, {0.15, 0.0, 0.8}},
                                {{1.0, 1.0, 0.7}, {1.2, 0.9, 0.2}},
                                {{0.0, 0.0, 0.5}, {0.0, 0.9, 0.5}}};
    double worst = 0.0, scale = 0.0;
    for (const auto& pr : pairs) {
      const double g = ev.plate_green(pr[0], pr[1], L);
      worst = std::max(worst, rel_err(g, oracles::plate_green_kspace(pr[0], pr[1], L)));
      scale = std::max(scale, std::abs(g));
    }
    double boundary = 0.0;
    for (const auto& pr : pairs) {
      for (double zb : {1e-10 * L, L * (1.0 - 1e-10)}) {
        boundary = std::max(boundary, std::abs(ev.plate_green(pr[0], Point3{pr[1].x, pr[1].y, zb}, L)));
      }
    }
    const bool boundary_ok = boundary < 1e-8 * scale;
    return finish(5, "plate-green-kspace", worst, 1e-6, 10.0, start,
                  "5 pairs vs 2D k-quadrature; max |G| at z' = 1e-10 L, (1-1e-10) L is " + fmt(boundary / scale) +
                      " of interior scale",
                  boundary_ok);
  });
}

CheckResult plate_wire(const Evaluators& ev) {
  return guarded(6, "plate-wire", 1e-5, 10.0, [&](Clock::time_point start) {
    const double L = 1.0, z0 = 0.3, lambda = 1e-9;
    const MediumConstants vac;
    quad::QuadConfig cfg;
    cfg.rel_tol = 1e-11;
    cfg.abs_tol = 1e-30;
    double worst = 0.0;
    for (double x : {0.05, 0.2, 0.5, 1.0, 1.5}) {
      for (double z : {0.2, 0.65}) {
        const Point3 y{x, 0.0, z};
        const double series = fields::plate_wire_potential(z0, lambda, L, y, cfg, vac).phi;
        // Line charge along y: φ = (λ/ε) ∫ G dy', symmetric about y' = 0.
        const auto q = quad::integrate_semi_infinite(
            [&](double yy) { return ev.plate_green(y, Point3{0.0, yy, z0}, L); }, 0.0, cfg);
        worst = std::max(worst, rel_err(series, 2.0 * q.value * lambda / vac.epsilon));
      }
    }
    const Point3 near{1e-3 * L, 0.0, 0.5};
    const double series = fields::plate_wire_potential(z0, lambda, L, near, cfg, vac).phi;
    const double closed = lambda / vac.epsilon * oracles::plate_wire_closed_form(z0, near.z, near.x, L);
    const double err_closed = rel_err(series, closed);
    return finish(6, "plate-wire", worst, 1e-5, 10.0, start,
                  "10 points vs Green-function line quadrature; closed log form at x = 1e-3 L: " + fmt(err_closed),
                  err_closed <= 1e-4);
  });
}

CheckResult ampere_circuit(const Evaluators& ev) {
  return guarded(7, "ampere-circuit", 5e-3, 10.0, [&](Clock::time_point start) {
    const double a = 1.0, I = 1.0;
    quad::QuadConfig cfg;
    cfg.rel_tol = 1e-10;
    cfg.abs_tol = 1e-20;
    const auto wire = sources::make_loop(a, I);
    auto h_field = [&](const Point3& y) {
      auto A = [&](const Point3& p, double) { return ev.loop_potential(a, I, p, cfg).A; };
      const double step = fields::matched_step(cfg.rel_tol, fields::distance_to_loop(a, y));
      return fields::derive_B(A, y, 0.0, step) / constants::mu0;
    };
    quad::QuadConfig circ_cfg;
    circ_cfg.rel_tol = 1e-8;
    circ_cfg.abs_tol = 1e-12;
    // Around the wire at (a, 0, 0), where it runs along +y: ẑ × x̂ = ŷ.
    const auto linking = fields::polygon_circuit({a, 0.0, 0.0}, {0, 0, 1}, {1, 0, 0}, 0.1 * a, 16);
    const auto apart = fields::polygon_circuit({0.5 * a, 0.0, 0.0}, {0, 0, 1}, {1, 0, 0}, 0.1 * a, 16);
    const auto in = fields::ampere_residual(wire, linking, 1, h_field, circ_cfg);
    const auto out = fields::ampere_residual(wire, apart, 0, h_field, circ_cfg);
    const double free = std::abs(out.circulation) / I;
    return finish(7, "ampere-circuit", std::max(in.residual, free), 5e-3, 10.0, start,
                  "linking circle r = 0.1a: |circ - I|/I = " + fmt(in.residual) + "; non-linking |circ|/I = " +
                      fmt(free));
  });
}

CheckResult gauge_residuals(const Evaluators& ev) {
  return guarded(8, "gauge-residuals", 1e-4, 0.0, [&](Clock::time_point start) {
    quad::QuadConfig cfg;
    cfg.rel_tol = 1e-10;
    cfg.abs_tol = 1e-22;
    const double a = 1.0, I = 1.0;
    double worst_loop = 0.0, worst_helix = 0.0, worst_lorenz = 0.0;
    auto loop_A = [&](const Point3& p, double) { return ev.loop_potential(a, I, p, cfg).A; };

    // Three-turn helix closed by its straight return lead.
    const double p = 0.2, P = sources::helix_wavenumber(a, p), L = 3.0 * 2.0 * kPi / P;
    const auto helix = sources::make_helix(a, p, L, I);
    const auto lead = sources::make_segment(helix.position(L), helix.position(0.0), I);
    auto helix_A = [&](const Point3& q, double) {
      return fields::helix_potential(a, p, L, I, q, cfg).A + fields::curve_potential(lead, q, cfg).A;
    };

    for (int k = 0; k < 10; ++k) {
      const double r = k % 2 == 0 ? 0.3 + 0.05 * k : 1.5 + 0.1 * k;
      const Point3 y = Point3::from_cylindrical(r, 0.9 * k + 0.2, -0.6 + 0.35 * k);
      const double hl = fields::matched_step(cfg.rel_tol, fields::distance_to_loop(a, y));
      worst_loop = std::max(worst_loop, fields::gauge_residual(loop_A, y, 0.0, hl).relative);
      const double d = std::min(fields::distance_to_curve(helix, y), fields::distance_to_curve(lead, y));
      const double hh = fields::matched_step(cfg.rel_tol, d);
      worst_helix = std::max(worst_helix, fields::gauge_residual(helix_A, y, 0.0, hh).relative);
    }

    const MediumConstants vac;
    const double c = vac.c();
    const auto charge = sources::make_uniform_charge(1e-9, Point3{0.1, -0.2, 0.05}, Vec3{0.3 * c, 0.1 * c, -0.05 * c});
    auto phi = [&](const Point3& y, double t) { return ev.lienard_wiechert(charge, y, t, vac, 1e-13).phi; };
    auto A = [&](const Point3& y, double t) { return ev.lienard_wiechert(charge, y, t, vac, 1e-13).A; };
    for (int k = 0; k < 10; ++k) {
      const Point3 y{1.0 + 0.3 * k, -0.5 + 0.2 * k, 0.4 - 0.15 * k};
      const double t = (k - 4) * 2e-9;
      const double d = distance(y, charge.trajectory(t));
      const double h = fields::matched_step(1e-12, d);
      worst_lorenz = std::max(worst_lorenz, fields::lorenz_residual(phi, A, y, t, vac, h, h / c).relative);
    }
    const double worst = std::max({worst_loop, worst_helix, worst_lorenz});
    return finish(8, "gauge-residuals", worst, 1e-4, 0.0, start,
                  "delta A: loop " + fmt(worst_loop) + ", closed helix " + fmt(worst_helix) + "; Lorenz " +
                      fmt(worst_lorenz));
  });
}

CheckResult boosted_coulomb(const Evaluators& ev) {
  return guarded(9, "boosted-coulomb", 1e-8, 1.0, [&](Clock::time_point start) {
    const MediumConstants vac;
    const double c = vac.c(), v = 0.5 * c, q = 1e-9;
    const auto src = sources::make_uniform_charge(q, Point3{}, Vec3{v, 0.0, 0.0});
    std::mt19937_64 rng(909);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double worst = 0.0, worst_t = 0.0;
    for (int k = 0; k < 20;) {
      const Point3 y{u(rng), u(rng), u(rng)};
      const double t = u(rng) * 1e-8;
      if (distance(y, src.trajectory(t)) < 0.1) continue;
      const auto lw = ev.lienard_wiechert(src, y, t, vac, 1e-12);
      worst = std::max(worst, rel_err(lw.phi, oracles::boosted_coulomb(q, v, y, t, vac.epsilon, c)));
      const auto st = fields::solve_retarded_time(src, y, t, c, 1e-12);
      const double tb = oracles::retarded_time_bisection(v, y, t, c);
      worst_t = std::max(worst_t, std::abs(st.t_ret - tb) / (distance(y, src.trajectory(tb)) / c));
      ++k;
    }
    return finish(9, "boosted-coulomb", worst, 1e-8, 1.0, start,
                  "v = 0.5c, 20 spacetime points; Newton vs bisection retarded time " + fmt(worst_t) +
                      " of R/c",
                  worst_t <= 1e-10);
  });
}

CheckResult quadrature_honesty(const Evaluators&) {
  return guarded(10, "quadrature-honesty", 1.0, 0.0, [&](Clock::time_point start) {
    const quad::QuadConfig cfg;
    struct Case {
      const char* name;
      std::function<quad::QuadResult()> run;
      double exact;
    };
    const double e = std::numbers::e;
    const std::vector<Case> cases = {
        {"x^2", [&] { return quad::integrate_adaptive([](double x) { return x * x; }, 0, 1, cfg); }, 1.0 / 3.0},
        {"sin", [&] { return quad::integrate_adaptive([](double x) { return std::sin(x); }, 0, kPi, cfg); }, 2.0},
        {"exp", [&] { return quad::integrate_adaptive([](double x) { return std::exp(x); }, 0, 1, cfg); }, e - 1.0},
        {"1/(1+x^2)", [&] { return quad::integrate_adaptive([](double x) { return 1.0 / (1.0 + x * x); }, 0, 1, cfg); },
         kPi / 4.0},
        {"sqrt", [&] { return quad::integrate_adaptive([](double x) { return std::sqrt(x); }, 0, 1, cfg); }, 2.0 / 3.0},
        {"1/sqrt", [&] { return quad::integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0, 1, cfg, {0.0}); },
         2.0},
        {"log", [&] { return quad::integrate_adaptive([](double x) { return std::log(x); }, 0, 1, cfg, {0.0}); }, -1.0},
        {"cos^2", [&] { return quad::integrate_adaptive([](double x) { return std::cos(x) * std::cos(x); }, 0, 2 * kPi, cfg); },
         kPi},
        {"runge", [&] { return quad::integrate_adaptive([](double x) { return 1.0 / (1.0 + 25.0 * x * x); }, 0, 1, cfg); },
         std::atan(5.0) / 5.0},
        {"exp(-x)", [&] { return quad::integrate_adaptive([](double x) { return std::exp(-x); }, 0, 10, cfg); },
         1.0 - std::exp(-10.0)},
        {"cbrt", [&] { return quad::integrate_adaptive([](double x) { return std::cbrt(x); }, 0, 1, cfg); }, 0.75},
        {"cos(20x)", [&] { return quad::integrate_adaptive([](double x) { return std::cos(20.0 * x); }, 0, 1, cfg); },
         std::sin(20.0) / 20.0},
        {"gauss", [&] { return quad::integrate_semi_infinite([](double x) { return std::exp(-x * x); }, 0, cfg); },
         0.5 * std::sqrt(kPi)},
        {"lorentz", [&] { return quad::integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x * x); }, 0, cfg); },
         0.5 * kPi},
        {"1/(x+0.01)", [&] { return quad::integrate_adaptive([](double x) { return 1.0 / (x + 0.01); }, 0, 1, cfg); },
         std::log(101.0)},
        {"|x|", [&] { return quad::integrate_adaptive([](double x) { return std::abs(x); }, -1, 1, cfg); }, 1.0},
        {"x^-0.3", [&] { return quad::integrate_adaptive([](double x) { return std::pow(x, -0.3); }, 0, 1, cfg, {0.0}); },
         1.0 / 0.7},
        {"1/(5-4cos)", [&] { return quad::integrate_periodic([](double x) { return 1.0 / (5.0 - 4.0 * std::cos(x)); }, 2 * kPi, 64, cfg); },
         2.0 * kPi / 3.0},
        {"exp(cos)", [&] { return quad::integrate_periodic_refined([](double x) { return std::exp(std::cos(x)); }, 2 * kPi, cfg); },
         2.0 * kPi * std::cyl_bessel_i(0.0, 1.0)},
        {"exp(x+y)", [&] { return quad::integrate_2d([](double x, double y) { return std::exp(x + y); }, {0, 1, 0, 1}, cfg); },
         (e - 1.0) * (e - 1.0)},
    };
    int honest = 0;
    std::string failures;
    for (const auto& c : cases) {
      const auto r = c.run();
      const double err = std::abs(r.value - c.exact);
      if (err <= 3.0 * r.error_estimate) {
        ++honest;
      } else {
        failures += std::string(failures.empty() ? "" : ", ") + c.name + " (err " + fmt(err) + ", est " +
                    fmt(r.error_estimate) + ")";
      }
    }
    const double dishonest = static_cast<double>(cases.size()) - honest;
    return finish(10, "quadrature-honesty", dishonest, 1.0, 0.0, start,
                  std::to_string(honest) + "/" + std::to_string(cases.size()) + " honest" +
                      (failures.empty() ? std::string() : "; dishonest: " + failures));
  });
}

std::vector<CheckResult> run_all(const Evaluators& ev) {
  return {coulomb_limit(ev),      loop_on_axis(ev),   helix_to_loop(ev),  long_solenoid(ev),
          plate_green_kspace(ev), plate_wire(ev),     ampere_circuit(ev), gauge_residuals(ev),
          boosted_coulomb(ev),    quadrature_honesty(ev)};
}

void print(std::ostream& os, const CheckResult& r) {
  os << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << ' ' << std::left << std::setw(20) << r.name
     << std::right << " metric=" << fmt(r.metric) << " tol=" << fmt(r.tolerance) << " time=" << std::fixed
     << std::setprecision(3) << r.seconds << 's' << std::defaultfloat;
  if (r.budget > 0.0) os << " (budget " << r.budget << "s)";
  os << "  " << r.detail << '\n';
}

}  // namespace leray::selfcheck
