#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leray/app/runner.hpp"
#include "leray/app/scene.hpp"
#include "leray/app/selfcheck.hpp"
#include "leray/errors.hpp"

namespace {

enum Exit { kOk = 0, kInvalid = 1, kPartial = 2, kInternal = 3 };

struct Common {
  std::string scene_path;
  std::vector<std::string> overrides;
  double tol = 0.0;
};

leray::app::Scene load(const Common& c) {
  auto doc = leray::app::load_document(c.scene_path);
  for (const auto& o : c.overrides) leray::app::apply_override(doc, o);
  if (c.tol > 0.0) leray::app::apply_override(doc, "quadrature.rel_tol=" + nlohmann::json(c.tol).dump());
  return leray::app::parse_scene(doc);
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("-s,--scene", c.scene_path, "Scene file (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--set", c.overrides, "Override a scene value, e.g. sources.0.current=2 (repeatable)");
  cmd->add_option("--tol", c.tol, "Relative quadrature tolerance (overrides quadrature.rel_tol)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Potentials and fields of line, surface and point sources"};
  app.require_subcommand(1);

  Common run_opts;
  std::string out_path;
  std::string format = "csv";
  int threads = 1;
  auto* run = app.add_subcommand("run", "Evaluate a scene on its grid");
  add_common(run, run_opts);
  run->add_option("-o,--out", out_path, "Output file (default: stdout)");
  run->add_option("-j,--threads", threads, "Worker threads (0: hardware concurrency)")->check(CLI::NonNegativeNumber);
  run->add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"csv", "doc"}));

  Common validate_opts;
  auto* validate = app.add_subcommand("validate", "Check a scene and print it with derived quantities");
  add_common(validate, validate_opts);

  auto* check = app.add_subcommand("selfcheck", "Run the built-in accuracy checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }

  try {
    if (*check) {
      bool ok = true;
      for (const auto& r : leray::selfcheck::run_all()) {
        leray::selfcheck::print(std::cout, r);
        ok = ok && r.passed;
      }
      return ok ? kOk : kInvalid;
    }
    if (*validate) {
      const auto scene = load(validate_opts);
      const nlohmann::json doc = {{"scene", leray::app::normalized(scene)},
                                  {"derived", leray::app::derived_quantities(scene)}};
      std::cout << doc.dump(2) << '\n';
      return kOk;
    }
    const auto scene = load(run_opts);
    const auto map = leray::app::evaluate(scene, threads);
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return kInvalid;
      }
    }
    std::ostream& os = out_path.empty() ? std::cout : file;
    if (format == "doc") {
      leray::app::write_doc(os, scene, map);
    } else {
      leray::app::write_csv(os, scene, map);
    }
    const int status = leray::app::exit_status(map);
    if (status != kOk) std::cerr << "warning: some grid points did not converge (see the note column)\n";
    return status;
  } catch (const leray::app::SceneError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const leray::InvalidParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
