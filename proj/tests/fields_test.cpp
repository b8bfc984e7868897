#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "leray/errors.hpp"
#include "leray/fields.hpp"
#include "support.hpp"

using namespace leray;
using namespace leray::fields;
using leray::constants::epsilon0;
using leray::constants::mu0;

namespace {

constexpr double kPi = std::numbers::pi;

// Closed-form loop potential through complete elliptic integrals (modulus k).
double loop_aphi_elliptic(double a, double I, double r, double z) {
  const double k2 = 4.0 * a * r / ((a + r) * (a + r) + z * z);
  const double k = std::sqrt(k2);
  return mu0 * I / (kPi * k) * std::sqrt(a / r) * ((1.0 - 0.5 * k2) * std::comp_ellint_1(k) - std::comp_ellint_2(k));
}

// Midpoint Biot–Savart sum over n straight pieces of a loop in z = 0.
Vec3 loop_biot_savart(double a, double I, const Point3& y, int n) {
  Vec3 b;
  const double dphi = 2.0 * kPi / n;
  for (int k = 0; k < n; ++k) {
    const double phi = (k + 0.5) * dphi;
    const Point3 x = Point3::from_cylindrical(a, phi, 0.0);
    const Vec3 dl = a * dphi * azimuthal_unit(phi);
    const Vec3 r = y - x;
    b += cross(dl, r) / std::pow(norm(r), 3);
  }
  return mu0 * I / (4.0 * kPi) * b;
}

// Line charge between grounded plates by 2D images: +λ at z0 + 2mL, −λ at −z0 + 2mL.
double plate_wire_images(double z0, double lambda, double L, double x, double z, int M) {
  auto partial = [&](int m_max) {
    double s = 0.0;
    for (int m = -m_max; m <= m_max; ++m) {
      const double dp = z - z0 - 2.0 * m * L, dm = z + z0 - 2.0 * m * L;
      s += 0.5 * std::log((x * x + dm * dm) / (x * x + dp * dp));
    }
    return lambda / (2.0 * kPi * epsilon0) * s;
  };
  // Paired log images leave an O(1/M) tail.
  return 2.0 * partial(2 * M) - partial(M);
}

VectorPotential loop_A(double a, double I, const quad::QuadConfig& cfg = {}) {
  return [=](const Point3& y, double) { return loop_potential(a, I, y, cfg).A; };
}

}  // namespace

// ---- loop ----------------------------------------------------------------

TEST(Loop, ZeroOnAxis) {
  EXPECT_EQ(norm(loop_potential(0.5, 1.0, {0, 0, 0.3}, {}).A), 0.0);
}

TEST(Loop, MatchesEllipticClosedForm) {
  test::Gen g(51);
  for (int i = 0; i < 20; ++i) {
    const double r = g.uniform(0.05, 3.0), z = g.uniform(-2, 2), phi = g.uniform(-kPi, kPi);
    if (std::hypot(r - 1.0, z) < 0.05) continue;
    const auto res = loop_potential(1.0, 2.0, Point3::from_cylindrical(r, phi, z), {});
    const auto c = to_cylindrical_components(res.A, phi);
    EXPECT_LT(test::rel_err(c.phi, loop_aphi_elliptic(1.0, 2.0, r, z)), 1e-9);
    EXPECT_NEAR(c.r, 0.0, 1e-15);
    EXPECT_EQ(c.z, 0.0);
    EXPECT_TRUE(res.diagnostics.converged);
  }
}

TEST(Loop, ReflectionAndRotationSymmetry) {
  test::Gen g(52);
  for (int i = 0; i < 10; ++i) {
    const double r = g.uniform(0.1, 2), z = g.uniform(0.1, 2), p1 = g.uniform(-kPi, kPi), p2 = g.uniform(-kPi, kPi);
    const double up = to_cylindrical_components(loop_potential(0.7, 1, Point3::from_cylindrical(r, p1, z), {}).A, p1).phi;
    const double down = to_cylindrical_components(loop_potential(0.7, 1, Point3::from_cylindrical(r, p1, -z), {}).A, p1).phi;
    const double turned = to_cylindrical_components(loop_potential(0.7, 1, Point3::from_cylindrical(r, p2, z), {}).A, p2).phi;
    EXPECT_NEAR(up, down, 1e-12 * std::abs(up));
    EXPECT_NEAR(up, turned, 1e-12 * std::abs(up));
  }
}

TEST(Loop, OnAxisFieldMatchesBiotSavart) {
  const double a = 0.4, I = 3.0;
  for (double za : {0.0, 0.5, 1.0, 2.0, 5.0}) {
    const Point3 y{0, 0, za * a};
    const double h = matched_step(1e-10, a);
    const double bz = derive_B(loop_A(a, I), y, 0.0, h).z;
    EXPECT_LT(test::rel_err(bz, loop_biot_savart(a, I, y, 4000).z), 1e-6) << za;
    EXPECT_LT(test::rel_err(bz, mu0 * I * a * a / (2.0 * std::pow(a * a + za * za * a * a, 1.5))), 1e-6);
  }
}

TEST(Loop, OffAxisFieldMatchesBiotSavart) {
  const double a = 0.4, I = 3.0;
  test::Gen g(63);
  for (int i = 0; i < 10; ++i) {
    const Point3 y = g.point(1.0);
    const double d = distance_to_loop(a, y);
    if (d < 0.1) continue;
    const Vec3 b = derive_B(loop_A(a, I), y, 0.0, matched_step(1e-10, d));
    EXPECT_LT(test::rel_err(b, loop_biot_savart(a, I, y, 20000)), 1e-5);
  }
}

TEST(Loop, LinearInCurrent) {
  const Point3 y{0.3, -0.2, 0.4};
  EXPECT_NEAR(test::rel_err(loop_potential(1, 2.5, y, {}).A, 2.5 * loop_potential(1, 1, y, {}).A), 0.0, 1e-14);
}

TEST(Loop, OnWireThrows) {
  EXPECT_THROW(loop_potential(1.0, 1.0, {1.0, 0, 0}, {}), OnSupportError);
}

// ---- helix -----------------------------------------------------------------

TEST(Helix, DistanceFormulaAtOrigin) {
  // At σ = 0, φ = 0, z = 0 the helix point is (a, 0, 0): R² = (r − a)².
  const auto h = sources::make_helix(0.5, 0.2, 1.0, 1.0);
  const Point3 y{1.3, 0, 0};
  EXPECT_NEAR(distance(h.position(0.0), y), 0.8, 1e-15);
}

TEST(Helix, MatchesGenericCurveIntegrator) {
  const double a = 0.3, p = 0.25, L = 4.0, I = 1.5;
  const auto src = sources::make_helix(a, p, L, I);
  test::Gen g(53);
  for (int i = 0; i < 8; ++i) {
    const Point3 y{g.uniform(-0.8, 0.8), g.uniform(-0.8, 0.8), g.uniform(-0.5, 4.5)};
    if (distance_to_curve(src, y) < 0.05) continue;
    const Vec3 direct = helix_potential(a, p, L, I, y, {}).A;
    const Vec3 generic = curve_potential(src, y, {}).A;
    EXPECT_LT(test::rel_err(direct, generic), 1e-9);
  }
}

TEST(Helix, ScrewInvariance) {
  // Moving the field point by the screw motion (φ, z) ↦ (φ + Pδ, z + pδ) is
  // the same as sliding the chart window by δ, so the helix σ ∈ [δ, L + δ]
  // seen from the moved point equals σ ∈ [0, L] seen from the original one.
  const double a = 0.2, p = 0.3, P = sources::helix_wavenumber(a, p), L = 4.0, I = 1.0;
  test::Gen g(64);
  for (int i = 0; i < 5; ++i) {
    const double delta = g.uniform(-3, 3), phi = g.uniform(-kPi, kPi);
    const Point3 y0 = Point3::from_cylindrical(g.uniform(0.3, 0.8), phi, g.uniform(-0.5, 1.5));
    const Point3 y1 = Point3::from_cylindrical(std::hypot(y0.x, y0.y), phi + P * delta, y0.z + p * delta);
    auto shifted = sources::make_helix(a, p, L, I);
    shifted.begin = delta;
    shifted.end = L + delta;
    const auto c0 = to_cylindrical_components(helix_potential(a, p, L, I, y0, {}).A, phi);
    const auto c1 = to_cylindrical_components(curve_potential(shifted, y1, {}).A, phi + P * delta);
    const double scale = std::hypot(c0.r, c0.phi, c0.z);
    EXPECT_NEAR(c0.r, c1.r, 1e-9 * scale);
    EXPECT_NEAR(c0.phi, c1.phi, 1e-9 * scale);
    EXPECT_NEAR(c0.z, c1.z, 1e-9 * scale);
  }
}

TEST(Helix, OneTurnApproachesLoopAtFirstOrder) {
  // Off the turn's plane the single turn behaves like a loop tilted by O(p):
  // halving p halves the discrepancy.
  const double a = 1.0, I = 1.0;
  auto gap = [&](double p, const Point3& y) {
    const double L = 2.0 * kPi / sources::helix_wavenumber(a, p);
    const Vec3 h = helix_potential(a, p, L, I, y, {}).A;
    const Vec3 l = loop_potential(a, I, y, {}).A;
    return norm(h - l) / norm(l);
  };
  for (const Point3 y : {Point3{1.5, 0.4, 0.8}, Point3{-0.3, 0.6, -0.5}, Point3{0.2, -2.0, 1.2}}) {
    const double g1 = gap(2e-3, y), g2 = gap(1e-3, y);
    EXPECT_NEAR(g1 / g2, 2.0, 0.1);
    EXPECT_LT(g2, 3e-2);
  }
}

TEST(Helix, LinearInCurrent) {
  const Point3 y{0.4, 0.1, 0.5};
  EXPECT_LT(test::rel_err(helix_potential(0.2, 0.3, 2, 2.0, y, {}).A, 2.0 * helix_potential(0.2, 0.3, 2, 1.0, y, {}).A), 1e-14);
}

TEST(Helix, RejectsBadPitch) {
  EXPECT_THROW(helix_potential(0.2, 1.2, 2, 1, {1, 0, 0}, {}), InvalidParameterError);
}

TEST(Helix, OpenHelixIsNotDivergenceFree) {
  // The open wire has end charges ∂ρ/∂t ≠ 0 in the static picture, so δA is
  // not zero near its ends; closing it with a return lead restores the gauge.
  const double a = 0.2, p = 0.2, L = 3.0;
  const Point3 y{0.05, 0.0, -0.05};
  VectorPotential open = [&](const Point3& x, double) { return helix_potential(a, p, L, 1.0, x, {}).A; };
  EXPECT_GT(gauge_residual(open, y, 0.0, matched_step(1e-10, 0.1)).relative, 1e-2);
}

// ---- solenoid --------------------------------------------------------------

TEST(Solenoid, AzimuthalWindingHasNoAxialPotential) {
  const auto r = solenoid_potential(0.2, 0.0, 1.0, 10.0, {0.3, 0.1, 0.4}, {});
  EXPECT_EQ(r.A.z, 0.0);
}

TEST(Solenoid, MethodsAgree) {
  test::Gen g(54);
  for (int i = 0; i < 4; ++i) {
    const Point3 y{g.uniform(-0.5, 0.5), g.uniform(-0.5, 0.5), g.uniform(-0.3, 1.3)};
    if (distance_to_cylinder(0.2, 1.0, y) < 0.02) continue;
    const Vec3 a = solenoid_potential(0.2, 0.3, 1.0, 5.0, y, {}, {}, SolenoidMethod::closed_inner).A;
    const Vec3 b = solenoid_potential(0.2, 0.3, 1.0, 5.0, y, {}, {}, SolenoidMethod::numeric_2d).A;
    EXPECT_LT(test::rel_err(a, b), 1e-8);
  }
}

TEST(Solenoid, MatchesGenericSurfaceIntegrator) {
  const auto src = sources::make_solenoid(0.2, 0.3, 1.0, 5.0);
  quad::QuadConfig cfg;
  cfg.rel_tol = 1e-8;
  const Point3 y{0.35, 0.1, 0.6};
  EXPECT_LT(test::rel_err(solenoid_potential(0.2, 0.3, 1.0, 5.0, y, cfg).A, surface_potential(src, y, cfg).A), 1e-6);
}

TEST(Solenoid, RotationInvariant) {
  const auto c1 = to_cylindrical_components(solenoid_potential(0.2, 0.3, 1, 5, Point3::from_cylindrical(0.3, 0.2, 0.4), {}).A, 0.2);
  const auto c2 = to_cylindrical_components(solenoid_potential(0.2, 0.3, 1, 5, Point3::from_cylindrical(0.3, 2.1, 0.4), {}).A, 2.1);
  EXPECT_NEAR(c1.r, c2.r, 1e-12 * std::abs(c1.phi));
  EXPECT_NEAR(c1.phi, c2.phi, 1e-12 * std::abs(c1.phi));
  EXPECT_NEAR(c1.z, c2.z, 1e-12 * std::abs(c1.z));
}

TEST(Solenoid, LongCoilInteriorAndExterior) {
  const double a = 0.1, L = 100 * a, kappa = 1.0;
  const auto sheet = sources::make_solenoid(a, 0.0, L, kappa);
  const double K = surface_current(sheet, 0.0, L / 2, {0, 0, 1});
  VectorPotential A = [&](const Point3& y, double) { return solenoid_potential(a, 0.0, L, kappa, y, {}).A; };
  const double b_in = derive_B(A, {0, 0, L / 2}, 0.0, matched_step(1e-10, a)).z;
  EXPECT_LT(test::rel_err(b_in, mu0 * K), 0.01);
  const double b_out = norm(derive_B(A, {10 * a, 0, L / 2}, 0.0, matched_step(1e-10, a)));
  EXPECT_LT(b_out, 0.01 * b_in);
}

TEST(Solenoid, OnSheetThrows) {
  EXPECT_THROW(solenoid_potential(0.2, 0.0, 1.0, 1.0, {0.2, 0, 0.5}, {}), OnSupportError);
}

// ---- plate wire ------------------------------------------------------------

TEST(PlateWire, GroundedPlates) {
  const auto z0 = plate_wire_potential(0.3, 1e-9, 1.0, {0.2, 0, 0.0}, {});
  const auto zL = plate_wire_potential(0.3, 1e-9, 1.0, {0.2, 0, 1.0}, {});
  EXPECT_EQ(z0.phi, 0.0);
  EXPECT_EQ(zL.phi, 0.0);
  const double near = plate_wire_potential(0.3, 1e-9, 1.0, {0.2, 0, 1e-9}, {}).phi;
  EXPECT_LT(std::abs(near), 1e-7 * plate_wire_potential(0.3, 1e-9, 1.0, {0.2, 0, 0.5}, {}).phi);
}

TEST(PlateWire, MirrorSymmetry) {
  test::Gen g(55);
  for (int i = 0; i < 10; ++i) {
    const double z0 = g.uniform(0.1, 0.9), z = g.uniform(0.05, 0.95), x = g.uniform(-1, 1);
    const double a = plate_wire_potential(z0, 1.0, 1.0, {x, 0, z}, {}).phi;
    const double b = plate_wire_potential(1.0 - z0, 1.0, 1.0, {x, 3.0, 1.0 - z}, {}).phi;
    EXPECT_NEAR(a, b, 1e-10 * std::abs(a));
  }
}

TEST(PlateWire, MatchesImageSum) {
  test::Gen g(56);
  for (int i = 0; i < 10; ++i) {
    const double z0 = g.uniform(0.1, 0.9), z = g.uniform(0.05, 0.95), x = g.uniform(0.01, 1.5) * (i % 2 ? 1 : -1);
    const double got = plate_wire_potential(z0, 2e-9, 1.0, {x, 0, z}, {}).phi;
    const double want = plate_wire_images(z0, 2e-9, 1.0, x, z, 20000);
    EXPECT_LT(test::rel_err(got, want), 1e-6) << x << ' ' << z;
  }
}

TEST(PlateWire, ClosedFormBranchIsContinuous) {
  const double at = plate_wire_potential(0.3, 1.0, 1.0, {0.0, 0, 0.6}, {}).phi;
  const double off = plate_wire_potential(0.3, 1.0, 1.0, {1e-7, 0, 0.6}, {}).phi;
  EXPECT_NEAR(at, off, 1e-6 * std::abs(at));
  EXPECT_THROW(plate_wire_potential(0.3, 1.0, 1.0, {0.0, 0, 0.3}, {}), OnSupportError);
  EXPECT_THROW(plate_wire_potential(0.3, 1.0, 1.0, {0.0, 0, 1.3}, {}), DomainError);
}

TEST(PlateWire, SatisfiesLaplace) {
  test::Gen g(57);
  for (int i = 0; i < 10; ++i) {
    const Point3 y{g.uniform(0.1, 1.0), g.uniform(-1, 1), g.uniform(0.2, 0.8)};
    ScalarPotential phi = [](const Point3& p, double) { return plate_wire_potential(0.5, 1.0, 1.0, p, {}).phi; };
    const double h = 1e-3;
    double lap = 0.0, mag = 0.0;
    for (const Vec3 e : {Vec3{h, 0, 0}, Vec3{0, h, 0}, Vec3{0, 0, h}}) {
      const double d2 = (phi(y + e, 0) - 2 * phi(y, 0) + phi(y - e, 0)) / (h * h);
      lap += d2;
      mag += std::abs(d2);
    }
    EXPECT_LT(std::abs(lap), 1e-4 * mag);
  }
}

// ---- dipole and charges ----------------------------------------------------

TEST(Dipole, Basics) {
  const sources::DipoleSource d{{1, 0, 0}, {0, 0, 2e-12}};
  EXPECT_EQ(dipole_potential(d, {3, 1, 0}).phi, 0.0);
  EXPECT_NEAR(dipole_potential(d, {1, 0, 0.5}).phi, 2e-12 / (4 * kPi * epsilon0 * 0.25), 1e-15);
}

TEST(Dipole, LimitOfTwoCharges) {
  const double s = 1e-3, q = 1e-9;
  const sources::DipoleSource d{{0, 0, 0}, {q * s, 0, 0}};
  test::Gen g(58);
  for (int i = 0; i < 10; ++i) {
    const Point3 y = g.shell({0, 0, 0}, 100 * s, 100 * s);
    if (std::abs(y.x) < 0.2 * norm(y.as_vec())) continue;  // near the null plane relative error is meaningless
    const double pair = coulomb_potential(q, {s / 2, 0, 0}, y).phi + coulomb_potential(-q, {-s / 2, 0, 0}, y).phi;
    EXPECT_LT(test::rel_err(dipole_potential(d, y).phi, pair), 0.01);
  }
}

TEST(Retarded, StaticSource) {
  const auto src = sources::make_uniform_charge(1.0, {1, 2, 3}, {0, 0, 0});
  const double c = MediumConstants{}.c();
  const auto st = solve_retarded_time(src, {4, 6, 3}, 2.0, c);
  EXPECT_NEAR(st.t_ret, 2.0 - 5.0 / c, 1e-20);
  EXPECT_DOUBLE_EQ(st.jacobian, 1.0);
}

TEST(Retarded, RecedingSourceJacobian) {
  // Charge on the x-axis moving in −x, field point at +x: n = +x̂, n·v = −v.
  const double c = 1.0, v = 0.6;
  const auto src = sources::make_uniform_charge(1.0, {0, 0, 0}, {-v, 0, 0});
  const auto st = solve_retarded_time(src, {5, 0, 0}, 0.0, c);
  EXPECT_NEAR(st.jacobian, 1.0 / (1.0 + v / c), 1e-14);
}

TEST(Retarded, NewtonAgreesWithBisection) {
  test::Gen g(59);
  const double c = 1.0;
  for (int i = 0; i < 20; ++i) {
    const Vec3 v = g.vec(0.5);
    const auto src = sources::make_uniform_charge(1.0, {0, 0, 0}, v);
    const Point3 y = g.point(3);
    const double t = g.uniform(-2, 2);
    const auto st = solve_retarded_time(src, y, t, c, 1e-13);
    // Independent oracle: plain bisection on g(t') = t' − t + |y − v t'|/c.
    auto gfun = [&](double tp) { return tp - t + norm(y - (Point3{} + v * tp)) / c; };
    double lo = t - 100.0, hi = t;
    for (int k = 0; k < 200; ++k) ((gfun(0.5 * (lo + hi)) < 0) ? lo : hi) = 0.5 * (lo + hi);
    EXPECT_NEAR(st.t_ret, 0.5 * (lo + hi), 1e-12 * (1 + st.distance / c));
    EXPECT_LT(std::abs(gfun(st.t_ret)), 1e-12 * st.distance / c + 1e-15);
  }
}

TEST(Retarded, Errors) {
  const auto fast = sources::make_uniform_charge(1.0, {0, 0, 0}, {2, 0, 0});
  EXPECT_THROW(solve_retarded_time(fast, {1, 1, 0}, 0.0, 1.0), SuperluminalError);
  const auto still = sources::make_uniform_charge(1.0, {0, 0, 0}, {0, 0, 0});
  EXPECT_THROW(solve_retarded_time(still, {0, 0, 0}, 0.0, 1.0), CoincidentPointsError);
}

TEST(LienardWiechert, CoulombLimit) {
  const auto src = sources::make_uniform_charge(2e-9, {0.1, 0.2, 0.3}, {0, 0, 0});
  const Point3 y{1, -1, 2};
  const auto r = lienard_wiechert(src, y, 0.0);
  EXPECT_NEAR(r.phi, coulomb_potential(2e-9, {0.1, 0.2, 0.3}, y).phi, 1e-15 * std::abs(r.phi));
  EXPECT_EQ(norm(r.A), 0.0);
}

TEST(LienardWiechert, InstantaneousLimitAsWaveSpeedGrows) {
  // c ×1e6 by shrinking μ: φ must approach the Coulomb potential of the
  // present position.
  MediumConstants fast;
  fast.mu = mu0 * 1e-12;
  const auto src = sources::make_circular_charge(1e-9, {0, 0, 0}, 0.5, 2.0 * kPi * 1e6);
  test::Gen g(60);
  for (int i = 0; i < 10; ++i) {
    const Point3 y = g.shell({0, 0, 0}, 1.0, 3.0);
    const double t = g.uniform(0, 1e-6);
    const double want = coulomb_potential(1e-9, src.trajectory(t), y, fast).phi;
    EXPECT_LT(test::rel_err(lienard_wiechert(src, y, t, fast).phi, want), 1e-5);
  }
}

TEST(LienardWiechert, BoostedCoulombClosedForm) {
  const MediumConstants m;
  const double c = m.c(), v = 0.5 * c, q = 1e-9;
  const auto src = sources::make_uniform_charge(q, {0, 0, 0}, {v, 0, 0});
  test::Gen g(61);
  for (int i = 0; i < 20; ++i) {
    const Point3 y = g.point(2);
    const double t = g.uniform(-3e-9, 3e-9);
    const double dx = y.x - v * t;
    const double want = q / (4 * kPi * epsilon0) / std::sqrt(dx * dx + 0.75 * (y.y * y.y + y.z * y.z));
    const auto r = lienard_wiechert(src, y, t, m);
    EXPECT_LT(test::rel_err(r.phi, want), 1e-10);
    EXPECT_LT(test::rel_err(r.A.x, m.mu * m.epsilon * v * r.phi), 1e-14);
  }
}

TEST(LienardWiechert, LorenzResidual) {
  const MediumConstants m;
  const auto src = sources::make_circular_charge(1e-9, {0, 0, 0}, 0.2, 2.0 * kPi * 5e7);
  ScalarPotential phi = [&](const Point3& y, double t) { return lienard_wiechert(src, y, t, m, 1e-14).phi; };
  VectorPotential A = [&](const Point3& y, double t) { return lienard_wiechert(src, y, t, m, 1e-14).A; };
  test::Gen g(62);
  for (int i = 0; i < 10; ++i) {
    const Point3 y = g.shell({0, 0, 0}, 0.6, 2.0);
    const double t = g.uniform(0, 2e-8), h = 1e-4;
    EXPECT_LT(lorenz_residual(phi, A, y, t, m, h, h / m.c()).relative, 1e-4);
  }
}

TEST(Linearity, AllEvaluatorsAreHomogeneous) {
  const Point3 y{0.31, -0.22, 0.45};
  const double s = -3.5;
  EXPECT_LT(test::rel_err(solenoid_potential(0.2, 0.3, 1, s, y, {}).A, s * solenoid_potential(0.2, 0.3, 1, 1, y, {}).A), 1e-14);
  EXPECT_NEAR(plate_wire_potential(0.3, s, 1, y, {}).phi, s * plate_wire_potential(0.3, 1, 1, y, {}).phi, 1e-14 * std::abs(s * plate_wire_potential(0.3, 1, 1, y, {}).phi));
  const auto d1 = dipole_potential({{0, 0, 0}, {1, 2, 3}}, y).phi, ds = dipole_potential({{0, 0, 0}, {s, 2 * s, 3 * s}}, y).phi;
  EXPECT_NEAR(ds, s * d1, 1e-14 * std::abs(ds));
  const auto src1 = sources::make_uniform_charge(1.0, {0, 0, 0}, {1e7, 0, 0});
  const auto srcs = sources::make_uniform_charge(s, {0, 0, 0}, {1e7, 0, 0});
  EXPECT_NEAR(lienard_wiechert(srcs, y, 1e-9).phi, s * lienard_wiechert(src1, y, 1e-9).phi, 1e-14 * std::abs(s * lienard_wiechert(src1, y, 1e-9).phi));
}
