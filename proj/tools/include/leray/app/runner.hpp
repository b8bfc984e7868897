#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "leray/app/scene.hpp"

namespace leray::app {

/// Superposes every source of a scene; immutable and safe to share between
/// threads.
class SceneModel {
 public:
  explicit SceneModel(const Scene& scene);

  struct Potentials {
    PotentialResult total;
    double err_A = 0.0;    // absolute quadrature error in A (T·m)
    double err_phi = 0.0;  // absolute quadrature error in φ (V)
  };

  /// Throws the library's OnSupportError / DomainError / ... per point.
  Potentials potentials(const Point3& y, double t) const;

  /// Distance from y to the nearest source support at time t.
  double local_scale(const Point3& y, double t) const;

  bool time_dependent() const { return time_dependent_; }
  bool has_surface() const { return has_surface_; }
  const Scene& scene() const { return scene_; }

 private:
  Scene scene_;
  std::vector<sources::CurveSource> helices_;    // one per helix entry, in order
  std::vector<sources::Polyline> polylines_;     // one per polyline entry, in order
  std::vector<sources::PointSource> charges_;    // one per point charge, in order
  bool time_dependent_ = false;
  bool has_surface_ = false;
};

struct Row {
  Point3 y;
  double t = 0.0;
  std::vector<double> values;  // requested quantities, in column order
  double err_A = 0.0;
  double err_phi = 0.0;
  bool converged = true;
  std::string note;
};

struct FieldMap {
  std::vector<std::string> columns;  // full header, including x, y, z, [t] and bookkeeping
  std::vector<Row> rows;
  bool has_time = false;
};

/// Evaluates every grid point; rows come back in grid order (x slowest,
/// then y, z, t) whatever the thread count.
FieldMap evaluate(const Scene& scene, int threads);

void write_csv(std::ostream& os, const Scene& scene, const FieldMap& map);
void write_doc(std::ostream& os, const Scene& scene, const FieldMap& map);

/// 0 when every row converged, 2 otherwise.
int exit_status(const FieldMap& map);

}  // namespace leray::app
