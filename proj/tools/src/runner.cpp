#include "leray/app/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iomanip>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "leray/errors.hpp"

namespace leray::app {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr const char* kSignConventions = "docs/SIGN_CONVENTIONS.md v1";
constexpr const char* kUnits =
    "SI: x y z in m, t in s, A in T*m (Wb/m), phi in V, B in T, E in V/m, err_A in T*m, err_phi in V";

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string hex64(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

// Sum of |∂²φ/∂x_i²| and the Laplacian itself, by second differences.
std::pair<double, double> second_differences(const fields::ScalarPotential& phi, const Point3& y, double t, double h) {
  const double centre = phi(y, t);
  double lap = 0.0, mag = 0.0;
  const Vec3 axes[3] = {{h, 0, 0}, {0, h, 0}, {0, 0, h}};
  for (const auto& e : axes) {
    const double d2 = (phi(y + e, t) - 2.0 * centre + phi(y - e, t)) / (h * h);
    lap += d2;
    mag += std::abs(d2);
  }
  return {lap, mag};
}

}  // namespace

SceneModel::SceneModel(const Scene& scene) : scene_(scene) {
  for (const auto& s : scene_.sources) {
    std::visit(overloaded{
                   [&](const HelixSpec& v) { helices_.push_back(sources::make_helix(v.radius, v.pitch, v.length, v.current)); },
                   [&](const PolylineSpec& v) { polylines_.push_back(sources::make_polyline(v.vertices, v.current, v.closed)); },
                   [&](const PointChargeSpec& v) {
                     charges_.push_back(sources::make_uniform_charge(v.charge, v.position, v.velocity));
                     time_dependent_ = true;
                   },
                   [&](const SolenoidSpec&) { has_surface_ = true; },
                   [](const auto&) {},
               },
               s);
  }
}

SceneModel::Potentials SceneModel::potentials(const Point3& y, double t) const {
  const auto& cfg = scene_.quadrature;
  const auto& medium = scene_.medium;
  const double lw_tol = std::clamp(cfg.rel_tol, 1e-15, 1e-12);
  Potentials out;
  std::size_t helix = 0, poly = 0, charge = 0;
  for (const auto& s : scene_.sources) {
    PotentialResult r;
    bool magnetic = true;
    std::visit(overloaded{
                   [&](const LoopSpec& v) { r = fields::loop_potential(v.radius, v.current, y - v.origin, cfg, medium); },
                   [&](const HelixSpec& v) {
                     ++helix;
                     r = fields::helix_potential(v.radius, v.pitch, v.length, v.current, y - v.origin, cfg, medium);
                   },
                   [&](const SolenoidSpec& v) {
                     r = fields::solenoid_potential(v.radius, v.pitch, v.length, v.kappa0, y - v.origin, cfg, medium);
                   },
                   [&](const PlateWireSpec& v) {
                     magnetic = false;
                     r = fields::plate_wire_potential(v.z0, v.line_charge, v.separation, Point3{y.x - v.x0, y.y, y.z},
                                                      cfg, medium);
                   },
                   [&](const PointChargeSpec&) {
                     magnetic = false;
                     r = fields::lienard_wiechert(charges_[charge++], y, t, medium, lw_tol);
                   },
                   [&](const DipoleSpec& v) {
                     magnetic = false;
                     r = fields::dipole_potential({v.position, v.moment}, y, medium);
                   },
                   [&](const PolylineSpec&) { r = fields::polyline_potential(polylines_[poly++], y, cfg, medium); },
               },
               s);
    (magnetic ? out.err_A : out.err_phi) += r.diagnostics.error_estimate;
    out.total += r;
  }
  return out;
}

double SceneModel::local_scale(const Point3& y, double t) const {
  double d = std::numeric_limits<double>::infinity();
  std::size_t helix = 0, poly = 0, charge = 0;
  for (const auto& s : scene_.sources) {
    const double ds = std::visit(
        overloaded{
            [&](const LoopSpec& v) { return fields::distance_to_loop(v.radius, y - v.origin); },
            [&](const HelixSpec& v) { return fields::distance_to_curve(helices_[helix++], y - v.origin); },
            [&](const SolenoidSpec& v) { return fields::distance_to_cylinder(v.radius, v.length, y - v.origin); },
            [&](const PlateWireSpec& v) {
              return std::min({std::hypot(y.x - v.x0, y.z - v.z0), std::abs(y.z), std::abs(v.separation - y.z)});
            },
            [&](const PointChargeSpec&) { return distance(y, charges_[charge++].trajectory(t)); },
            [&](const DipoleSpec& v) { return distance(y, v.position); },
            [&](const PolylineSpec&) {
              double m = std::numeric_limits<double>::infinity();
              for (const auto& seg : polylines_[poly]) m = std::min(m, fields::distance_to_curve(seg, y, 16));
              ++poly;
              return m;
            },
        },
        s);
    d = std::min(d, ds);
  }
  return d;
}

namespace {

std::vector<std::string> value_columns(const Scene& scene, const SceneModel& model) {
  std::vector<std::string> c;
  const auto& o = scene.outputs;
  if (o.A) c.insert(c.end(), {"Ax", "Ay", "Az"});
  if (o.phi) c.push_back("phi");
  if (o.B) c.insert(c.end(), {"Bx", "By", "Bz"});
  if (o.E) c.insert(c.end(), {"Ex", "Ey", "Ez"});
  if (o.residuals) {
    c.insert(c.end(), {"gauge_rel", "divb_rel"});
    if (!model.time_dependent()) c.push_back("laplace_rel");
  }
  return c;
}

Row evaluate_row(const SceneModel& model, const Point3& y, double t, std::size_t n_values) {
  const Scene& scene = model.scene();
  const auto& o = scene.outputs;
  Row row;
  row.y = y;
  row.t = t;
  try {
    const double scale = model.local_scale(y, t);
    if (!(scale > 0.0)) throw OnSupportError("grid point lies on a source support");
    const auto pot = model.potentials(y, t);
    row.err_A = pot.err_A;
    row.err_phi = pot.err_phi;
    row.converged = pot.total.diagnostics.converged;
    row.note = pot.total.diagnostics.note;

    const double rel = scene.quadrature.rel_tol;
    const double h = fields::matched_step(rel, scale);
    const double h2 = std::pow(rel, 0.25) * scale;  // nested / second differences
    const double c = scene.medium.c();
    const bool derivatives = o.B || o.E || o.residuals;
    if (derivatives && model.has_surface() && scale < 3.0 * h)
      throw OnSupportError("within three difference steps of a current sheet");

    fields::VectorPotential A = [&model](const Point3& p, double tt) { return model.potentials(p, tt).total.A; };
    fields::ScalarPotential phi = [&model](const Point3& p, double tt) { return model.potentials(p, tt).total.phi; };

    if (o.A) row.values.insert(row.values.end(), {pot.total.A.x, pot.total.A.y, pot.total.A.z});
    if (o.phi) row.values.push_back(pot.total.phi);
    if (o.B) {
      const Vec3 b = fields::derive_B(A, y, t, h);
      row.values.insert(row.values.end(), {b.x, b.y, b.z});
    }
    if (o.E) {
      const Vec3 e = fields::derive_E(phi, A, y, t, h, h / c, model.time_dependent());
      row.values.insert(row.values.end(), {e.x, e.y, e.z});
    }
    if (o.residuals) {
      const double gauge = model.time_dependent()
                               ? fields::lorenz_residual(phi, A, y, t, scene.medium, h, h / c).relative
                               : fields::gauge_residual(A, y, t, h).relative;
      row.values.push_back(gauge);
      row.values.push_back(fields::divergence_b_residual(A, y, t, h2).relative);
      if (!model.time_dependent()) {
        const auto [lap, mag] = second_differences(phi, y, t, h2);
        row.values.push_back(mag > 0.0 ? std::abs(lap) / mag : 0.0);
      }
    }
  } catch (const OnSupportError& e) {
    row.converged = false;
    row.note = std::string("on support: ") + e.what();
  } catch (const CoincidentPointsError& e) {
    row.converged = false;
    row.note = std::string("on support: ") + e.what();
  } catch (const DomainError& e) {
    row.converged = false;
    row.note = std::string("outside domain: ") + e.what();
  } catch (const NonConvergenceError& e) {
    row.converged = false;
    row.note = std::string("no convergence: ") + e.what();
  }
  if (row.values.size() != n_values) {
    row.values.assign(n_values, kNaN);
    row.err_A = row.err_phi = kNaN;
  }
  return row;
}

}  // namespace

FieldMap evaluate(const Scene& scene, int threads) {
  const SceneModel model(scene);
  FieldMap map;
  map.has_time = !scene.grid.t.empty();
  map.columns = {"x", "y", "z"};
  if (map.has_time) map.columns.push_back("t");
  const auto values = value_columns(scene, model);
  map.columns.insert(map.columns.end(), values.begin(), values.end());
  map.columns.insert(map.columns.end(), {"err_A", "err_phi", "converged", "note"});

  const auto& g = scene.grid;
  const std::vector<double> times = map.has_time ? g.t : std::vector<double>{0.0};
  const std::size_t n = g.rows();
  map.rows.resize(n);

  auto point = [&](std::size_t i, Point3& y, double& t) {
    const std::size_t nt = times.size(), nz = g.z.size(), ny = g.y.size();
    t = times[i % nt];
    i /= nt;
    y.z = g.z[i % nz];
    i /= nz;
    y.y = g.y[i % ny];
    i /= ny;
    y.x = g.x[i];
  };

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < n; i = next++) {
        Point3 y;
        double t = 0.0;
        point(i, y, t);
        map.rows[i] = evaluate_row(model, y, t, values.size());
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = n;
    }
  };
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads), std::max<std::size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return map;
}

void write_csv(std::ostream& os, const Scene& scene, const FieldMap& map) {
  os << "# leray field map\n";
  os << "# scene_hash: fnv1a64:" << hex64(scene_hash(scene)) << '\n';
  os << "# units: " << kUnits << '\n';
  os << "# sign_conventions: " << kSignConventions << '\n';
  for (std::size_t i = 0; i < map.columns.size(); ++i) os << (i ? "," : "") << map.columns[i];
  os << '\n';
  for (const auto& r : map.rows) {
    os << number(r.y.x) << ',' << number(r.y.y) << ',' << number(r.y.z);
    if (map.has_time) os << ',' << number(r.t);
    for (double v : r.values) os << ',' << number(v);
    os << ',' << number(r.err_A) << ',' << number(r.err_phi) << ',' << (r.converged ? 1 : 0) << ','
       << csv_field(r.note) << '\n';
  }
}

void write_doc(std::ostream& os, const Scene& scene, const FieldMap& map) {
  using nlohmann::json;
  auto value = [](double v) { return std::isnan(v) ? json(nullptr) : json(v); };
  json rows = json::array();
  for (const auto& r : map.rows) {
    json row = json::array({r.y.x, r.y.y, r.y.z});
    if (map.has_time) row.push_back(r.t);
    for (double v : r.values) row.push_back(value(v));
    row.push_back(value(r.err_A));
    row.push_back(value(r.err_phi));
    row.push_back(r.converged);
    row.push_back(r.note);
    rows.push_back(std::move(row));
  }
  const json doc = {{"scene_hash", "fnv1a64:" + hex64(scene_hash(scene))},
                    {"units", kUnits},
                    {"sign_conventions", kSignConventions},
                    {"scene", normalized(scene)},
                    {"columns", map.columns},
                    {"rows", rows}};
  os << doc.dump(2) << '\n';
}

int exit_status(const FieldMap& map) {
  for (const auto& r : map.rows)
    if (!r.converged) return 2;
  return 0;
}

}  // namespace leray::app
