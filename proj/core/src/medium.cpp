#include "leray/medium.hpp"

#include <algorithm>
#include <cmath>

#include "leray/errors.hpp"

namespace leray {

double MediumConstants::c() const { return 1.0 / std::sqrt(epsilon * mu); }

void MediumConstants::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw InvalidParameterError("permittivity must be positive");
  if (!(mu > 0.0) || !std::isfinite(mu)) throw InvalidParameterError("permeability must be positive");
}

void Diagnostics::absorb(const quad::QuadResult& r, double factor) {
  error_estimate = std::max(error_estimate, std::abs(factor) * r.error_estimate);
  evaluations += r.evaluations;
  if (!r.converged) {
    converged = false;
    if (note.empty()) note = "quadrature did not reach tolerance";
  }
}

void Diagnostics::merge(const Diagnostics& o) {
  error_estimate += o.error_estimate;
  evaluations += o.evaluations;
  converged = converged && o.converged;
  if (note.empty()) note = o.note;
}

PotentialResult& PotentialResult::operator+=(const PotentialResult& o) {
  A += o.A;
  phi += o.phi;
  diagnostics.merge(o.diagnostics);
  return *this;
}

}  // namespace leray
