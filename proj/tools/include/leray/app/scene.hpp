#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "leray/fields.hpp"
#include "json.hpp"

namespace leray::app {

/// Invalid scene input; `path()` names the offending key, e.g. "sources[1].pitch".
class SceneError : public std::runtime_error {
 public:
  SceneError(std::string path, const std::string& message)
      : std::runtime_error((path.empty() ? std::string() : path + ": ") + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct LoopSpec {
  double radius = 0.0;
  double current = 0.0;
  Vec3 origin;
};

struct HelixSpec {
  double radius = 0.0;
  double pitch = 0.0;
  double length = 0.0;
  double current = 0.0;
  Vec3 origin;
};

struct SolenoidSpec {
  double radius = 0.0;
  double pitch = 0.0;
  double length = 0.0;
  double kappa0 = 0.0;
  Vec3 origin;
};

/// Line charge parallel to y at x = x0, z = z0 between plates z = 0, L.
struct PlateWireSpec {
  double z0 = 0.0;
  double line_charge = 0.0;
  double separation = 0.0;
  double x0 = 0.0;
};

/// Uniformly moving point charge: x(t) = position + t·velocity.
struct PointChargeSpec {
  double charge = 0.0;
  Point3 position;
  Vec3 velocity;
};

struct DipoleSpec {
  Point3 position;
  Vec3 moment;
};

struct PolylineSpec {
  std::vector<Point3> vertices;
  double current = 0.0;
  bool closed = true;
};

using SourceSpec =
    std::variant<LoopSpec, HelixSpec, SolenoidSpec, PlateWireSpec, PointChargeSpec, DipoleSpec, PolylineSpec>;

struct Grid {
  std::vector<double> x, y, z;
  std::vector<double> t;  // empty: static sweep at t = 0, no t column
  std::size_t rows() const;
};

struct Outputs {
  bool A = true;
  bool phi = true;
  bool B = true;
  bool E = false;
  bool residuals = false;
};

struct Scene {
  MediumConstants medium;
  std::vector<SourceSpec> sources;
  Grid grid;
  quad::QuadConfig quadrature;
  Outputs outputs;
};

/// Reads a JSON document from disk; throws SceneError on I/O or syntax errors.
nlohmann::json load_document(const std::string& path);

/// Applies one "dotted.path=value" override. Array elements are addressed by
/// index ("sources.0.current=2"). The value is parsed as JSON when possible,
/// otherwise taken as a string.
void apply_override(nlohmann::json& doc, const std::string& assignment);

/// Validates and converts a scene document. Unknown keys are errors.
Scene parse_scene(const nlohmann::json& doc);

/// The scene with every default filled in, as a canonical document.
nlohmann::json normalized(const Scene& scene);

/// 64-bit FNV-1a of the canonical serialization.
std::uint64_t scene_hash(const Scene& scene);

/// Derived quantities per source (λ, P, K, c, ...), for `validate`.
nlohmann::json derived_quantities(const Scene& scene);

}  // namespace leray::app
