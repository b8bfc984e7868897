#include "leray/app/scene.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "leray/errors.hpp"

namespace leray::app {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw SceneError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SceneError(path, "must be finite");
  return v;
}

Vec3 as_vec(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) throw SceneError(path, "expected an array of three numbers");
  return {as_number(j[0], index(path, 0)), as_number(j[1], index(path, 1)), as_number(j[2], index(path, 2))};
}

Point3 as_point(const json& j, const std::string& path) {
  const Vec3 v = as_vec(j, path);
  return {v.x, v.y, v.z};
}

// Object reader that remembers which keys were consumed, so leftovers can be
// reported as unknown.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw SceneError(path_, "expected an object");
  }

  const std::string& path() const { return path_; }
  std::string at(const std::string& key) const { return join(path_, key); }

  const json* find(const std::string& key) {
    seen_.insert(key);
    const auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  const json& require(const std::string& key) {
    const json* v = find(key);
    if (!v) throw SceneError(at(key), "required key is missing");
    return *v;
  }

  double number(const std::string& key) { return as_number(require(key), at(key)); }
  double number(const std::string& key, double fallback) {
    const json* v = find(key);
    return v ? as_number(*v, at(key)) : fallback;
  }
  Vec3 vec(const std::string& key) { return as_vec(require(key), at(key)); }
  Vec3 vec(const std::string& key, const Vec3& fallback) {
    const json* v = find(key);
    return v ? as_vec(*v, at(key)) : fallback;
  }
  bool boolean(const std::string& key, bool fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_boolean()) throw SceneError(at(key), "expected true or false");
    return v->get<bool>();
  }

  void done() const {
    for (const auto& item : j_.items())
      if (!seen_.count(item.key())) throw SceneError(at(item.key()), "unknown key");
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

double positive(Reader& r, const std::string& key) {
  const double v = r.number(key);
  if (!(v > 0.0)) throw SceneError(r.at(key), "must be positive");
  return v;
}

std::vector<double> parse_axis(const json& j, const std::string& path) {
  if (j.is_number()) return {as_number(j, path)};
  Reader r(j, path);
  std::vector<double> out;
  if (const json* values = r.find("values")) {
    if (!values->is_array() || values->empty()) throw SceneError(r.at("values"), "expected a non-empty array");
    for (std::size_t i = 0; i < values->size(); ++i) out.push_back(as_number((*values)[i], index(r.at("values"), i)));
    r.done();
    return out;
  }
  const json& count_j = r.require("count");
  if (!count_j.is_number_integer()) throw SceneError(r.at("count"), "expected an integer");
  const long count = count_j.get<long>();
  if (count < 1) throw SceneError(r.at("count"), "must be >= 1");
  const double lo = r.number("min");
  const double hi = r.number("max", lo);
  r.done();
  if (count == 1) return {lo};
  for (long i = 0; i < count; ++i) {
    out.push_back(i + 1 == count ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return out;
}

SourceSpec parse_source(const json& j, const std::string& path, const MediumConstants& medium) {
  Reader r(j, path);
  const json& type_j = r.require("type");
  if (!type_j.is_string()) throw SceneError(r.at("type"), "expected a string");
  const std::string type = type_j.get<std::string>();
  SourceSpec out;
  if (type == "loop") {
    LoopSpec s;
    s.radius = positive(r, "radius");
    s.current = r.number("current");
    s.origin = r.vec("origin", {});
    out = s;
  } else if (type == "helix") {
    HelixSpec s;
    s.radius = positive(r, "radius");
    s.pitch = r.number("pitch");
    if (!(s.pitch > 0.0 && s.pitch < 1.0))
      throw SceneError(r.at("pitch"), "helix pitch must satisfy 0 < p < 1 (a²P² + p² = 1 has no real P otherwise)");
    s.length = positive(r, "length");
    s.current = r.number("current");
    s.origin = r.vec("origin", {});
    out = s;
  } else if (type == "solenoid") {
    SolenoidSpec s;
    s.radius = positive(r, "radius");
    s.pitch = r.number("pitch", 0.0);
    if (!(s.pitch >= 0.0 && s.pitch < 1.0)) throw SceneError(r.at("pitch"), "solenoid pitch must satisfy 0 <= p < 1");
    s.length = positive(r, "length");
    s.kappa0 = r.number("kappa0");
    s.origin = r.vec("origin", {});
    out = s;
  } else if (type == "plate_wire") {
    PlateWireSpec s;
    s.separation = positive(r, "separation");
    s.z0 = r.number("z0");
    if (!(s.z0 > 0.0 && s.z0 < s.separation)) throw SceneError(r.at("z0"), "must satisfy 0 < z0 < separation");
    s.line_charge = r.number("line_charge");
    s.x0 = r.number("x0", 0.0);
    out = s;
  } else if (type == "point_charge") {
    PointChargeSpec s;
    s.charge = r.number("charge");
    s.position = as_point(r.require("position"), r.at("position"));
    s.velocity = r.vec("velocity", {});
    if (!(norm(s.velocity) < medium.c())) throw SceneError(r.at("velocity"), "speed must be below c");
    out = s;
  } else if (type == "dipole") {
    DipoleSpec s;
    s.position = as_point(r.require("position"), r.at("position"));
    s.moment = r.vec("moment");
    out = s;
  } else if (type == "polyline") {
    PolylineSpec s;
    const json& v = r.require("vertices");
    if (!v.is_array() || v.size() < 2) throw SceneError(r.at("vertices"), "expected at least two vertices");
    for (std::size_t i = 0; i < v.size(); ++i) s.vertices.push_back(as_point(v[i], index(r.at("vertices"), i)));
    s.current = r.number("current");
    s.closed = r.boolean("closed", true);
    for (std::size_t i = 0; i + 1 < s.vertices.size(); ++i)
      if (s.vertices[i] == s.vertices[i + 1]) throw SceneError(r.at("vertices"), "consecutive vertices coincide");
    if (s.closed && s.vertices.size() < 3) throw SceneError(r.at("vertices"), "a closed polyline needs three vertices");
    if (s.closed && s.vertices.front() == s.vertices.back())
      throw SceneError(r.at("vertices"), "closed polylines are closed implicitly; do not repeat the first vertex");
    out = s;
  } else {
    throw SceneError(r.at("type"),
                     "unknown source type '" + type +
                         "' (expected loop, helix, solenoid, plate_wire, point_charge, dipole or polyline)");
  }
  r.done();
  return out;
}

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }
json point_json(const Point3& p) { return json::array({p.x, p.y, p.z}); }

json axis_json(const std::vector<double>& v) { return json{{"values", v}}; }

}  // namespace

std::size_t Grid::rows() const { return x.size() * y.size() * z.size() * std::max<std::size_t>(t.size(), 1); }

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SceneError("", "cannot open scene file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SceneError("", std::string("scene file is not valid JSON: ") + e.what());
  }
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw SceneError("", "override '" + assignment + "' is not key=value");
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value;
  try {
    value = json::parse(text);
  } catch (const json::parse_error&) {
    value = text;
  }
  std::vector<std::string> parts;
  std::stringstream ss(key);
  for (std::string part; std::getline(ss, part, '.');) {
    if (part.empty()) throw SceneError(key, "empty path component");
    parts.push_back(part);
  }
  json* node = &doc;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    const bool last = i + 1 == parts.size();
    if (node->is_array()) {
      std::size_t pos = 0;
      std::size_t idx = 0;
      try {
        idx = std::stoul(p, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != p.size() || idx >= node->size()) throw SceneError(key, "'" + p + "' is not a valid array index");
      node = &(*node)[idx];
    } else {
      if (node->is_null()) *node = json::object();
      if (!node->is_object()) throw SceneError(key, "'" + p + "' does not address an object");
      if (!last && !node->contains(p)) (*node)[p] = json::object();
      node = &(*node)[p];
    }
    if (last) *node = value;
  }
}

Scene parse_scene(const json& doc) {
  Reader top(doc, "");
  const json& schema = top.require("schema");
  if (!schema.is_number_integer() || schema.get<long>() != 1) throw SceneError("schema", "only schema 1 is supported");

  Scene scene;
  if (const json* m = top.find("medium")) {
    Reader r(*m, "medium");
    scene.medium.epsilon = r.number("epsilon", constants::epsilon0);
    scene.medium.mu = r.number("mu", constants::mu0);
    r.done();
    if (!(scene.medium.epsilon > 0.0)) throw SceneError("medium.epsilon", "must be positive");
    if (!(scene.medium.mu > 0.0)) throw SceneError("medium.mu", "must be positive");
  }

  const json& sources = top.require("sources");
  if (!sources.is_array() || sources.empty()) throw SceneError("sources", "expected a non-empty array");
  for (std::size_t i = 0; i < sources.size(); ++i)
    scene.sources.push_back(parse_source(sources[i], index("sources", i), scene.medium));

  // The plate Green function replaces the free kernel for every source in
  // the slab, so plate wires cannot be mixed with free-space sources.
  std::size_t plates = 0;
  double separation = 0.0;
  for (std::size_t i = 0; i < scene.sources.size(); ++i) {
    if (const auto* w = std::get_if<PlateWireSpec>(&scene.sources[i])) {
      if (plates > 0 && w->separation != separation)
        throw SceneError(index("sources", i) + ".separation", "all plate wires must share one plate separation");
      separation = w->separation;
      ++plates;
    }
  }
  if (plates > 0 && plates != scene.sources.size())
    throw SceneError("sources", "plate_wire sources cannot be combined with free-space sources");

  {
    Reader g(top.require("grid"), "grid");
    scene.grid.x = parse_axis(g.require("x"), "grid.x");
    scene.grid.y = parse_axis(g.require("y"), "grid.y");
    scene.grid.z = parse_axis(g.require("z"), "grid.z");
    if (const json* t = g.find("t")) scene.grid.t = parse_axis(*t, "grid.t");
    g.done();
  }

  if (const json* q = top.find("quadrature")) {
    Reader r(*q, "quadrature");
    scene.quadrature.abs_tol = r.number("abs_tol", scene.quadrature.abs_tol);
    scene.quadrature.rel_tol = r.number("rel_tol", scene.quadrature.rel_tol);
    const json* ms = r.find("max_subdivisions");
    if (ms) {
      if (!ms->is_number_integer() || ms->get<long>() < 1)
        throw SceneError("quadrature.max_subdivisions", "expected a positive integer");
      scene.quadrature.max_subdivisions = ms->get<int>();
    }
    r.done();
    try {
      scene.quadrature.validate();
    } catch (const InvalidParameterError& e) {
      throw SceneError("quadrature", e.what());
    }
  }

  if (const json* o = top.find("outputs")) {
    if (!o->is_array() || o->empty()) throw SceneError("outputs", "expected a non-empty array");
    scene.outputs = Outputs{false, false, false, false, false};
    for (std::size_t i = 0; i < o->size(); ++i) {
      const json& item = (*o)[i];
      const std::string name = item.is_string() ? item.get<std::string>() : std::string();
      if (name == "A") {
        scene.outputs.A = true;
      } else if (name == "phi") {
        scene.outputs.phi = true;
      } else if (name == "B") {
        scene.outputs.B = true;
      } else if (name == "E") {
        scene.outputs.E = true;
      } else if (name == "residuals") {
        scene.outputs.residuals = true;
      } else {
        throw SceneError(index("outputs", i), "expected one of A, phi, B, E, residuals");
      }
    }
  }
  top.done();
  return scene;
}

json normalized(const Scene& scene) {
  json sources = json::array();
  for (const auto& s : scene.sources) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          json j;
          if constexpr (std::is_same_v<T, LoopSpec>) {
            j = {{"type", "loop"}, {"radius", v.radius}, {"current", v.current}, {"origin", vec_json(v.origin)}};
          } else if constexpr (std::is_same_v<T, HelixSpec>) {
            j = {{"type", "helix"}, {"radius", v.radius},   {"pitch", v.pitch},
                 {"length", v.length}, {"current", v.current}, {"origin", vec_json(v.origin)}};
          } else if constexpr (std::is_same_v<T, SolenoidSpec>) {
            j = {{"type", "solenoid"}, {"radius", v.radius}, {"pitch", v.pitch},
                 {"length", v.length},  {"kappa0", v.kappa0}, {"origin", vec_json(v.origin)}};
          } else if constexpr (std::is_same_v<T, PlateWireSpec>) {
            j = {{"type", "plate_wire"}, {"z0", v.z0}, {"line_charge", v.line_charge},
                 {"separation", v.separation}, {"x0", v.x0}};
          } else if constexpr (std::is_same_v<T, PointChargeSpec>) {
            j = {{"type", "point_charge"},
                 {"charge", v.charge},
                 {"position", point_json(v.position)},
                 {"velocity", vec_json(v.velocity)}};
          } else if constexpr (std::is_same_v<T, DipoleSpec>) {
            j = {{"type", "dipole"}, {"position", point_json(v.position)}, {"moment", vec_json(v.moment)}};
          } else {
            json verts = json::array();
            for (const auto& p : v.vertices) verts.push_back(point_json(p));
            j = {{"type", "polyline"}, {"vertices", verts}, {"current", v.current}, {"closed", v.closed}};
          }
          sources.push_back(j);
        },
        s);
  }
  json grid = {{"x", axis_json(scene.grid.x)}, {"y", axis_json(scene.grid.y)}, {"z", axis_json(scene.grid.z)}};
  if (!scene.grid.t.empty()) grid["t"] = axis_json(scene.grid.t);
  json outputs = json::array();
  if (scene.outputs.A) outputs.push_back("A");
  if (scene.outputs.phi) outputs.push_back("phi");
  if (scene.outputs.B) outputs.push_back("B");
  if (scene.outputs.E) outputs.push_back("E");
  if (scene.outputs.residuals) outputs.push_back("residuals");
  return {{"schema", 1},
          {"medium", {{"epsilon", scene.medium.epsilon}, {"mu", scene.medium.mu}}},
          {"sources", sources},
          {"grid", grid},
          {"quadrature",
           {{"abs_tol", scene.quadrature.abs_tol},
            {"rel_tol", scene.quadrature.rel_tol},
            {"max_subdivisions", scene.quadrature.max_subdivisions}}},
          {"outputs", outputs}};
}

std::uint64_t scene_hash(const Scene& scene) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : normalized(scene).dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

json derived_quantities(const Scene& scene) {
  const double mu = scene.medium.mu;
  json out = json::array();
  for (const auto& s : scene.sources) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          json j;
          if constexpr (std::is_same_v<T, LoopSpec>) {
            j = {{"type", "loop"},
                 {"lambda", 4.0 * kPi * mu * v.current * v.radius},
                 {"kernel_strength", mu * v.current * v.radius}};
          } else if constexpr (std::is_same_v<T, HelixSpec>) {
            const double P = sources::helix_wavenumber(v.radius, v.pitch);
            j = {{"type", "helix"},
                 {"P", P},
                 {"lambda", 4.0 * kPi * mu * v.current * v.radius},
                 {"turns", v.length * P / (2.0 * kPi)},
                 {"rise", v.pitch * v.length}};
          } else if constexpr (std::is_same_v<T, SolenoidSpec>) {
            const double P = sources::helix_wavenumber(v.radius, v.pitch);
            const double K = v.kappa0 * v.radius * P;
            j = {{"type", "solenoid"}, {"P", P}, {"K", K}, {"ideal_interior_B", mu * K}};
          } else if constexpr (std::is_same_v<T, PlateWireSpec>) {
            j = {{"type", "plate_wire"}, {"decay_length", v.separation / kPi}};
          } else if constexpr (std::is_same_v<T, PointChargeSpec>) {
            j = {{"type", "point_charge"}, {"beta", norm(v.velocity) / scene.medium.c()}};
          } else if constexpr (std::is_same_v<T, DipoleSpec>) {
            j = {{"type", "dipole"}, {"moment_magnitude", norm(v.moment)}};
          } else {
            double length = 0.0;
            for (std::size_t i = 0; i + 1 < v.vertices.size(); ++i) length += distance(v.vertices[i], v.vertices[i + 1]);
            if (v.closed) length += distance(v.vertices.back(), v.vertices.front());
            j = {{"type", "polyline"},
                 {"segments", v.vertices.size() - (v.closed ? 0 : 1)},
                 {"length", length}};
          }
          out.push_back(j);
        },
        s);
  }
  return {{"c", scene.medium.c()}, {"rows", scene.grid.rows()}, {"sources", out}};
}

}  // namespace leray::app
