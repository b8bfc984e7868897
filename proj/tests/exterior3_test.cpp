#include <gtest/gtest.h>

#include <cmath>

#include "leray/exterior3.hpp"
#include "support.hpp"

using namespace leray;
using namespace leray::exterior3;

namespace {

FormField one_form(std::function<Vec3(const Point3&)> f) {
  return FormField(1, [f](const Point3& p, double) {
    const Vec3 v = f(p);
    return Components{v.x, v.y, v.z};
  });
}

FormField scalar(int degree, std::function<double(const Point3&)> f) {
  return FormField(degree, [f](const Point3& p, double) { return Components{f(p), 0.0, 0.0}; });
}

// Smooth polynomial test fields, one per degree.
FormField poly(int degree) {
  switch (degree) {
    case 0:
      return scalar(0, [](const Point3& p) { return p.x * p.x * p.y - 2.0 * p.y * p.z + p.z * p.z * p.z; });
    case 3:
      return scalar(3, [](const Point3& p) { return p.x * p.y * p.z + p.x * p.x; });
    default:
      return FormField(degree, [](const Point3& p, double) {
        return Components{p.y * p.z * p.z, p.x * p.x - p.z, p.x * p.y * p.y + 3.0 * p.z};
      });
  }
}

}  // namespace

TEST(Hodge, StarOfOneIsVolume) {
  const auto v = hodge(FormField::constant(0, {2.5, 0, 0}));
  EXPECT_EQ(v.degree(), 3);
  EXPECT_EQ(v({0.3, 0.1, 0.2})[0], 2.5);
}

TEST(Hodge, StarOfDxIsDyDz) {
  const auto s = hodge(FormField::constant(1, {1, 0, 0}));
  EXPECT_EQ(s.degree(), 2);
  EXPECT_EQ(basis_label(2, 0), "dy^dz");
  EXPECT_EQ(s({1, 2, 3})[0], 1.0);
  EXPECT_EQ(s({1, 2, 3})[1], 0.0);
  EXPECT_EQ(s({1, 2, 3})[2], 0.0);
}

TEST(Hodge, DoubleStarIsIdentityExactly) {
  test::Gen g(11);
  for (int degree = 0; degree <= 3; ++degree) {
    const auto a = poly(degree);
    const auto aa = hodge(hodge(a));
    EXPECT_EQ(aa.degree(), degree);
    for (int i = 0; i < 20; ++i) {
      const Point3 p = g.point(3.0);
      for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(aa(p)[k], a(p)[k]);
    }
  }
}

TEST(Hodge, Linearity) {
  test::Gen g(12);
  for (int degree = 0; degree <= 3; ++degree) {
    const auto a = poly(degree);
    const auto b = hodge(poly(3 - degree));
    const double alpha = g.uniform(-2, 2), beta = g.uniform(-2, 2);
    const auto lhs = hodge(alpha * a + beta * b);
    const auto ha = hodge(a), hb = hodge(b);
    for (int i = 0; i < 10; ++i) {
      const Point3 p = g.point(2.0);
      for (std::size_t k = 0; k < lhs.size(); ++k)
        EXPECT_NEAR(lhs(p)[k], alpha * ha(p)[k] + beta * hb(p)[k], 1e-12 * (1 + std::abs(lhs(p)[k])));
    }
  }
}

TEST(Wedge, DxWedgeDyIsDxDy) {
  const auto w = wedge(FormField::constant(1, {1, 0, 0}), FormField::constant(1, {0, 1, 0}));
  EXPECT_EQ(w.degree(), 2);
  const auto c = w({0, 0, 0});
  EXPECT_EQ(c[0], 0.0);
  EXPECT_EQ(c[1], 0.0);
  EXPECT_EQ(c[2], 1.0);
}

TEST(Wedge, OneFormWithTwoFormIsDot) {
  const auto w = wedge(FormField::constant(1, {1, 2, 3}), FormField::constant(2, {4, 5, 6}));
  EXPECT_EQ(w.degree(), 3);
  EXPECT_DOUBLE_EQ(w({0, 0, 0})[0], 32.0);
}

TEST(ExteriorDerivative, LinearCoefficientIsExact) {
  // d(x dy) = dx^dy
  const auto a = one_form([](const Point3& p) { return Vec3{0, p.x, 0}; });
  const auto da = d_numeric(a);
  const auto c = da({0.7, -0.4, 1.3});
  EXPECT_NEAR(c[0], 0.0, 1e-9);
  EXPECT_NEAR(c[1], 0.0, 1e-9);
  EXPECT_NEAR(c[2], 1.0, 1e-9);
}

TEST(ExteriorDerivative, GradientOfQuadratic) {
  const auto f = scalar(0, [](const Point3& p) { return p.x * p.x + p.y * p.y; });
  const auto c = d_numeric(f)({1, 0, 0});
  EXPECT_NEAR(c[0], 2.0, 1e-8);
  EXPECT_NEAR(c[1], 0.0, 1e-8);
  EXPECT_NEAR(c[2], 0.0, 1e-8);
}

TEST(ExteriorDerivative, SquareVanishes) {
  test::Gen g(13);
  for (int degree = 0; degree <= 1; ++degree) {
    const auto dd = d_numeric(d_numeric(poly(degree), 1e-3), 1e-3);
    for (int i = 0; i < 10; ++i) {
      const Point3 p = g.point(1.5);
      for (std::size_t k = 0; k < dd.size(); ++k) EXPECT_NEAR(dd(p)[k], 0.0, 1e-5) << "degree " << degree;
    }
  }
}

TEST(ExteriorDerivative, TopDegreeIsZeroSpace) {
  EXPECT_EQ(d_numeric(poly(3)).size(), 0u);
}

TEST(Codifferential, SignTable) {
  // δ = s_p # d #, with η = (-1)^p: s = {+1, -1, +1, -1} for p = 0..3.
  EXPECT_EQ(codifferential_sign(1), -1);
  EXPECT_EQ(codifferential_sign(2), 1);
  EXPECT_EQ(codifferential_sign(3), -1);
  for (int p = 0; p <= 3; ++p) EXPECT_EQ(eta_sign(p), p % 2 ? -1 : 1);
}

TEST(Codifferential, OfZeroFormIsZero) {
  const auto d = codifferential(poly(0));
  for (double v : d({1, 2, 3})) EXPECT_EQ(v, 0.0);
}

TEST(Codifferential, RadialOneFormGivesMinusThree) {
  // Hand computation: #(x dx + y dy + z dz) = x dy^dz + y dz^dx + z dx^dy,
  // d of that = 3 dx^dy^dz, # gives 3, η on a 1-form gives -1: δ = -3.
  const auto a = one_form([](const Point3& p) { return p.as_vec(); });
  test::Gen g(14);
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(codifferential(a)(g.point(2.0))[0], -3.0, 1e-8);
}

TEST(Codifferential, SquareVanishes) {
  test::Gen g(15);
  for (int degree = 2; degree <= 3; ++degree) {
    const auto dd = codifferential(codifferential(poly(degree), 1e-3), 1e-3);
    for (int i = 0; i < 10; ++i) {
      const Point3 p = g.point(1.5);
      for (std::size_t k = 0; k < dd.size(); ++k) EXPECT_NEAR(dd(p)[k], 0.0, 1e-5);
    }
  }
}

TEST(HodgeLaplacian, IsMinusComponentwiseLaplacian) {
  // Hand Laplacians of poly(1): ∇²(y z²) = 2y, ∇²(x² - z) = 2, ∇²(x y² + 3z) = 2x.
  const auto lap = hodge_laplacian(poly(1), 1e-3);
  test::Gen g(16);
  for (int i = 0; i < 10; ++i) {
    const Point3 p = g.point(1.5);
    const auto c = lap(p);
    EXPECT_NEAR(c[0], -2.0 * p.y, 1e-5);
    EXPECT_NEAR(c[1], -2.0, 1e-5);
    EXPECT_NEAR(c[2], -2.0 * p.x, 1e-5);
  }
}

TEST(HodgeLaplacian, ScalarCase) {
  // ∇²(x² y - 2yz + z³) = 2y + 6z.
  const auto lap = hodge_laplacian(poly(0), 1e-3);
  const Point3 p{0.3, -0.8, 0.5};
  EXPECT_NEAR(lap(p)[0], -(2.0 * p.y + 6.0 * p.z), 1e-5);
}

TEST(Interior, ContractionOfTwoForm) {
  // i_{ex} (dx^dy) = dy
  const auto w = interior([](const Point3&, double) { return Vec3{1, 0, 0}; }, FormField::constant(2, {0, 0, 1}));
  EXPECT_EQ(w.degree(), 1);
  const auto c = w({0, 0, 0});
  EXPECT_EQ(c[0], 0.0);
  EXPECT_EQ(c[1], 1.0);
  EXPECT_EQ(c[2], 0.0);
}

TEST(Step, DefaultScalesWithPoint) {
  EXPECT_DOUBLE_EQ(default_step({0, 0, 0}), 1e-5);
  EXPECT_DOUBLE_EQ(default_step({300, 0, 400}), 5e-3);
}
