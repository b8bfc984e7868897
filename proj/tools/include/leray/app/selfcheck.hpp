#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "leray/fields.hpp"
#include "leray/kernels.hpp"

namespace leray::selfcheck {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double metric = 0.0;     // worst observed error in the check's own measure
  double tolerance = 0.0;  // the bound the metric must meet
  double seconds = 0.0;
  double budget = 0.0;     // wall-clock limit in seconds (0 = none)
  std::string detail;
};

/// Evaluators the checks call. Tests swap in tampered versions to confirm
/// the checks actually bite.
struct Evaluators {
  std::function<PotentialResult(const sources::PointSource&, const Point3&, double, const MediumConstants&, double)>
      lienard_wiechert = [](const sources::PointSource& s, const Point3& y, double t, const MediumConstants& m,
                            double tol) { return fields::lienard_wiechert(s, y, t, m, tol); };
  std::function<PotentialResult(double, double, const Point3&, const quad::QuadConfig&)> loop_potential =
      [](double a, double i, const Point3& y, const quad::QuadConfig& c) { return fields::loop_potential(a, i, y, c); };
  std::function<double(const Point3&, const Point3&, double)> plate_green = [](const Point3& x, const Point3& y,
                                                                               double L) {
    return kernels::PlateGreen(L)(x, y);
  };
};

CheckResult coulomb_limit(const Evaluators& ev = {});
CheckResult loop_on_axis(const Evaluators& ev = {});
CheckResult helix_to_loop(const Evaluators& ev = {});
CheckResult long_solenoid(const Evaluators& ev = {});
CheckResult plate_green_kspace(const Evaluators& ev = {});
CheckResult plate_wire(const Evaluators& ev = {});
CheckResult ampere_circuit(const Evaluators& ev = {});
CheckResult gauge_residuals(const Evaluators& ev = {});
CheckResult boosted_coulomb(const Evaluators& ev = {});
CheckResult quadrature_honesty(const Evaluators& ev = {});

/// All ten checks in order.
std::vector<CheckResult> run_all(const Evaluators& ev = {});

/// One line per check: "[PASS] 1 coulomb-limit  metric=… tol=… time=…s".
void print(std::ostream& os, const CheckResult& r);

}  // namespace leray::selfcheck
