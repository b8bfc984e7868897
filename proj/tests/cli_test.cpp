#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

// Runs the installed-layout `leray` binary as a child process.

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(LERAY_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path write_scene(const std::string& name, const std::string& body) {
  const auto dir = std::filesystem::temp_directory_path() / "leray_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << body;
  return path;
}

const char* kLoop = R"({
  "schema": 1,
  "sources": [{"type": "loop", "radius": 0.5, "current": 2.0}],
  "grid": {"x": {"min": -0.3, "max": 0.3, "count": 3}, "y": 0.1, "z": {"min": -0.4, "max": 0.4, "count": 3}}
})";

const char* kHelix = R"({
  "schema": 1,
  "sources": [{"type": "helix", "radius": 0.2, "pitch": 0.3, "length": 1.0, "current": 1.0}],
  "grid": {"x": {"min": -0.3, "max": 0.3, "count": 3}, "y": 0.1, "z": {"min": -0.4, "max": 0.4, "count": 3}}
})";

const char* kBoth = R"({
  "schema": 1,
  "sources": [{"type": "loop", "radius": 0.5, "current": 2.0},
              {"type": "helix", "radius": 0.2, "pitch": 0.3, "length": 1.0, "current": 1.0}],
  "grid": {"x": {"min": -0.3, "max": 0.3, "count": 3}, "y": 0.1, "z": {"min": -0.4, "max": 0.4, "count": 3}}
})";

std::vector<std::vector<double>> numeric_rows(const std::string& csv) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(csv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    for (int i = 0; i < 10 && std::getline(cells, cell, ','); ++i) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST(Cli, RunSucceeds) {
  const auto r = run("run --scene " + write_scene("loop.json", kLoop).string());
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(numeric_rows(r.out).size(), 9u);
}

TEST(Cli, Deterministic) {
  const auto path = write_scene("loop.json", kLoop).string();
  EXPECT_EQ(run("run --scene " + path + " --set sources.0.current=3").out,
            run("run --scene " + path + " --set sources.0.current=3").out);
}

TEST(Cli, ThreadsDoNotChangeBytes) {
  const auto path = write_scene("both.json", kBoth).string();
  EXPECT_EQ(run("run --threads 1 --scene " + path).out, run("run --threads 3 --scene " + path).out);
}

TEST(Cli, SuperpositionRowWise) {
  const auto a = numeric_rows(run("run --scene " + write_scene("loop.json", kLoop).string()).out);
  const auto b = numeric_rows(run("run --scene " + write_scene("helix.json", kHelix).string()).out);
  const auto ab = numeric_rows(run("run --scene " + write_scene("both.json", kBoth).string()).out);
  ASSERT_EQ(a.size(), ab.size());
  ASSERT_EQ(b.size(), ab.size());
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t k = 3; k < ab[i].size(); ++k) EXPECT_NEAR(ab[i][k], a[i][k] + b[i][k], 1e-12);
}

TEST(Cli, EmptyGridIsInvalidInput) {
  const auto path = write_scene("loop.json", kLoop).string();
  EXPECT_EQ(run("run --scene " + path + " --set grid.z.count=0").status, 1);
}

TEST(Cli, ValidateReportsDiagnostics) {
  const auto path = write_scene("helix.json", kHelix).string();
  EXPECT_EQ(run("validate --scene " + path).status, 0);
  const auto bad = run("validate --scene " + path + " --set sources.0.pitch=1.2");
  EXPECT_EQ(bad.status, 1);
}

TEST(Cli, ValidatePrintsLambda) {
  const auto r = run("validate --scene " + write_scene("loop.json", kLoop).string());
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"lambda\""), std::string::npos);
  EXPECT_NE(r.out.find("\"derived\""), std::string::npos);
}

TEST(Cli, OnSupportPointGivesPartialStatus) {
  const auto path = write_scene("loop.json", kLoop).string();
  const auto r = run("run --scene " + path + " --set grid.x=0.5 --set grid.y=0 --set grid.z=0");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("on support"), std::string::npos);
}

TEST(Cli, DocFormat) {
  const auto r = run("run --format doc --scene " + write_scene("loop.json", kLoop).string());
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"columns\""), std::string::npos);
}

TEST(Cli, MissingSceneIsInvalid) {
  EXPECT_EQ(run("run --scene /nonexistent/scene.json").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
}
