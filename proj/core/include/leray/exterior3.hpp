#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "leray/geometry.hpp"

namespace leray::exterior3 {

/// Component values of a form at one point. Only the first
/// `component_count(degree)` entries are meaningful.
///
/// Basis order: 0-forms {1}; 1-forms {dx, dy, dz}; 2-forms
/// {dy∧dz, dz∧dx, dx∧dy}; 3-forms {dx∧dy∧dz}. With this ordering the
/// Euclidean Hodge star maps component arrays to themselves.
using Components = std::array<double, 3>;

using Evaluator = std::function<Components(const Point3&, double t)>;
using ScalarComponent = std::function<double(const Point3&, double t)>;

/// Number of independent components of a degree-p form on R³: C(3, p).
/// Degrees -1 and 4 are the zero spaces produced by δ on 0-forms and d on
/// 3-forms; they have no components.
constexpr std::size_t component_count(int degree) {
  switch (degree) {
    case 0:
    case 3:
      return 1;
    case 1:
    case 2:
      return 3;
    default:
      return 0;
  }
}

/// Human-readable basis label, e.g. "dz^dx".
std::string_view basis_label(int degree, std::size_t index);

/// A p-form on R³ given pointwise by a callable, optionally t-dependent.
class FormField {
 public:
  FormField(int degree, Evaluator eval, bool time_dependent = false);

  /// Builds a form from one callable per basis component.
  static FormField from_components(int degree, std::vector<ScalarComponent> components,
                                   bool time_dependent = false);
  static FormField constant(int degree, const Components& values);
  static FormField zero(int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return component_count(degree_); }
  bool time_dependent() const { return time_dependent_; }

  Components operator()(const Point3& p, double t = 0.0) const;
  double component(std::size_t index, const Point3& p, double t = 0.0) const;

  FormField scaled(double s) const;
  friend FormField operator+(const FormField& a, const FormField& b);
  friend FormField operator*(double s, const FormField& a) { return a.scaled(s); }

 private:
  int degree_;
  Evaluator eval_;
  bool time_dependent_;
};

/// η a = (-1)^p a.
int eta_sign(int degree);

/// Sign s_p with δ = s_p · # d # on p-forms; from δ = #⁻¹ d # η and ## = 1.
int codifferential_sign(int degree);

/// Euclidean Hodge dual; exact (no approximation).
FormField hodge(const FormField& a);

/// Pointwise wedge product; requires deg(a) + deg(b) <= 3.
FormField wedge(const FormField& a, const FormField& b);

/// Interior product i_W a with a vector field W.
FormField interior(const std::function<Vec3(const Point3&, double)>& w, const FormField& a);

/// Central-difference step. Empty selects h = 1e-5 · max(1, |point|).
using Step = std::optional<double>;

double default_step(const Point3& p);

/// Exterior derivative via second-order central differences.
/// Throws OnSupportError when a component is non-finite inside the stencil.
FormField d_numeric(const FormField& a, Step h = std::nullopt);

/// δ a = # d # η a; lowers the degree by one, δ(0-form) = 0.
FormField codifferential(const FormField& a, Step h = std::nullopt);

/// Hodge–de Rham operator Δ = dδ + δd (minus the componentwise Laplacian).
FormField hodge_laplacian(const FormField& a, Step h = std::nullopt);

}  // namespace leray::exterior3
