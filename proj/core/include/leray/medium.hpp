#pragma once

#include <string>

#include "leray/geometry.hpp"
#include "leray/quad.hpp"

namespace leray {

namespace constants {
// CODATA 2018.
inline constexpr double mu0 = 1.25663706212e-6;       // H/m
inline constexpr double epsilon0 = 8.8541878128e-12;  // F/m
}  // namespace constants

/// Homogeneous, lossless medium. c is derived, never stored.
struct MediumConstants {
  double epsilon = constants::epsilon0;
  double mu = constants::mu0;

  static MediumConstants vacuum() { return {}; }
  double c() const;
  /// Throws InvalidParameterError unless ε, μ are positive and finite.
  void validate() const;
};

/// Quadrature bookkeeping carried alongside every potential.
struct Diagnostics {
  double error_estimate = 0.0;  // absolute, in the units of the largest component
  long evaluations = 0;
  bool converged = true;
  std::string note;

  /// Folds a quadrature result, scaled by `factor`, into the totals.
  void absorb(const quad::QuadResult& r, double factor);
  void merge(const Diagnostics& other);
};

/// A in T·m (Cartesian components of the 1-form), φ in V.
struct PotentialResult {
  Vec3 A;
  double phi = 0.0;
  Diagnostics diagnostics;

  PotentialResult& operator+=(const PotentialResult& o);
};

}  // namespace leray
