#include "leray/exterior3.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "leray/errors.hpp"

namespace leray::exterior3 {

namespace {

void require_degree(int degree) {
  if (degree < -1 || degree > 4) throw InvalidParameterError("form degree out of range");
}

// Sign table for δ = s_p · # d #, p = 0..3.
constexpr std::array<int, 4> kCodifferentialSign = {+1, -1, +1, -1};

bool all_finite(const Components& c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(c[i])) return false;
  }
  return true;
}

}  // namespace

std::string_view basis_label(int degree, std::size_t index) {
  static constexpr std::array<std::string_view, 3> one = {"dx", "dy", "dz"};
  static constexpr std::array<std::string_view, 3> two = {"dy^dz", "dz^dx", "dx^dy"};
  if (index >= component_count(degree)) throw std::out_of_range("basis index");
  switch (degree) {
    case 0:
      return "1";
    case 1:
      return one[index];
    case 2:
      return two[index];
    default:
      return "dx^dy^dz";
  }
}

FormField::FormField(int degree, Evaluator eval, bool time_dependent)
    : degree_(degree), eval_(std::move(eval)), time_dependent_(time_dependent) {
  require_degree(degree);
  if (!eval_) throw InvalidParameterError("FormField needs an evaluator");
}

FormField FormField::from_components(int degree, std::vector<ScalarComponent> components, bool time_dependent) {
  require_degree(degree);
  if (components.size() != component_count(degree))
    throw InvalidParameterError("component count must equal C(3, degree)");
  return FormField(
      degree,
      [comps = std::move(components)](const Point3& p, double t) {
        Components out{};
        for (std::size_t i = 0; i < comps.size(); ++i) out[i] = comps[i](p, t);
        return out;
      },
      time_dependent);
}

FormField FormField::constant(int degree, const Components& values) {
  return FormField(degree, [values](const Point3&, double) { return values; });
}

FormField FormField::zero(int degree) { return constant(degree, Components{}); }

Components FormField::operator()(const Point3& p, double t) const { return eval_(p, t); }

double FormField::component(std::size_t index, const Point3& p, double t) const {
  if (index >= size()) throw std::out_of_range("form component index");
  return eval_(p, t)[index];
}

FormField FormField::scaled(double s) const {
  return FormField(
      degree_,
      [eval = eval_, s](const Point3& p, double t) {
        Components c = eval(p, t);
        for (double& v : c) v *= s;
        return c;
      },
      time_dependent_);
}

FormField operator+(const FormField& a, const FormField& b) {
  if (a.degree() != b.degree()) throw InvalidParameterError("cannot add forms of different degree");
  return FormField(
      a.degree(),
      [a, b](const Point3& p, double t) {
        Components x = a(p, t);
        const Components y = b(p, t);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return x;
      },
      a.time_dependent() || b.time_dependent());
}

int eta_sign(int degree) { return (degree % 2 == 0) ? 1 : -1; }

int codifferential_sign(int degree) {
  if (degree < 0 || degree > 3) throw InvalidParameterError("codifferential sign needs degree 0..3");
  return kCodifferentialSign[static_cast<std::size_t>(degree)];
}

FormField hodge(const FormField& a) {
  if (a.degree() < 0 || a.degree() > 3) throw InvalidParameterError("hodge needs degree 0..3");
  // The chosen basis orders make # the identity on component arrays.
  return FormField(3 - a.degree(), [a](const Point3& p, double t) { return a(p, t); }, a.time_dependent());
}

FormField wedge(const FormField& a, const FormField& b) {
  const int p = a.degree();
  const int q = b.degree();
  if (p < 0 || q < 0 || p + q > 3) throw InvalidParameterError("wedge needs deg(a) + deg(b) <= 3");
  const bool td = a.time_dependent() || b.time_dependent();
  return FormField(
      p + q,
      [a, b, p, q](const Point3& x, double t) {
        const Components u = a(x, t);
        const Components v = b(x, t);
        Components out{};
        if (p == 0) {
          for (std::size_t i = 0; i < component_count(q); ++i) out[i] = u[0] * v[i];
        } else if (q == 0) {
          for (std::size_t i = 0; i < component_count(p); ++i) out[i] = u[i] * v[0];
        } else if (p == 1 && q == 1) {
          const Vec3 c = cross({u[0], u[1], u[2]}, {v[0], v[1], v[2]});
          out = {c.x, c.y, c.z};
        } else {
          // 1∧2 and 2∧1 both give the dot product on R³.
          out[0] = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
        }
        return out;
      },
      td);
}

FormField interior(const std::function<Vec3(const Point3&, double)>& w, const FormField& a) {
  const int p = a.degree();
  if (p < 0 || p > 3) throw InvalidParameterError("interior product needs degree 0..3");
  if (p == 0) return FormField::zero(-1);
  return FormField(
      p - 1,
      [w, a, p](const Point3& x, double t) {
        const Vec3 v = w(x, t);
        const Components c = a(x, t);
        Components out{};
        if (p == 1) {
          out[0] = v.x * c[0] + v.y * c[1] + v.z * c[2];
        } else if (p == 2) {
          const Vec3 r = cross({c[0], c[1], c[2]}, v);
          out = {r.x, r.y, r.z};
        } else {
          out = {c[0] * v.x, c[0] * v.y, c[0] * v.z};
        }
        return out;
      },
      a.time_dependent());
}

double default_step(const Point3& p) { return 1e-5 * std::max(1.0, norm(p.as_vec())); }

FormField d_numeric(const FormField& a, Step h) {
  const int p = a.degree();
  if (p == 3 || p == 4 || p == -1) return FormField::zero(p == -1 ? 0 : 4);
  if (h && !(*h > 0.0)) throw InvalidParameterError("finite-difference step must be positive");

  return FormField(
      p + 1,
      [a, p, h](const Point3& x, double t) {
        const double step = h ? *h : default_step(x);
        const std::size_t n = component_count(p);
        // grad[j][i] = ∂_j a_i
        std::array<Components, 3> grad{};
        const std::array<Vec3, 3> axes = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
        for (int j = 0; j < 3; ++j) {
          const Components plus = a(x + axes[j] * step, t);
          const Components minus = a(x - axes[j] * step, t);
          if (!all_finite(plus, n) || !all_finite(minus, n))
            throw OnSupportError("form is singular inside the finite-difference stencil");
          for (std::size_t i = 0; i < n; ++i) grad[j][i] = (plus[i] - minus[i]) / (2.0 * step);
        }
        Components out{};
        if (p == 0) {
          out = {grad[0][0], grad[1][0], grad[2][0]};
        } else if (p == 1) {
          out[0] = grad[1][2] - grad[2][1];
          out[1] = grad[2][0] - grad[0][2];
          out[2] = grad[0][1] - grad[1][0];
        } else {
          out[0] = grad[0][0] + grad[1][1] + grad[2][2];
        }
        return out;
      },
      a.time_dependent());
}

FormField codifferential(const FormField& a, Step h) {
  const int p = a.degree();
  if (p <= 0) return FormField::zero(-1);
  if (p > 3) throw InvalidParameterError("codifferential needs degree 0..3");
  return hodge(d_numeric(hodge(a), h)).scaled(codifferential_sign(p));
}

FormField hodge_laplacian(const FormField& a, Step h) {
  const int p = a.degree();
  if (p < 0 || p > 3) throw InvalidParameterError("hodge_laplacian needs degree 0..3");
  FormField out = FormField::zero(p);
  if (p > 0) out = out + d_numeric(codifferential(a, h), h);
  if (p < 3) out = out + codifferential(d_numeric(a, h), h);
  return out;
}

}  // namespace leray::exterior3
