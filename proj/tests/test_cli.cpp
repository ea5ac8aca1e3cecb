#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tcbound/report.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace tcbound;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(TCBOUND_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name,
                                const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("space reports match their golden files") {
  for (const auto& n : catalog_space_names()) {
    auto r = run_cli("space --builtin " + n + " --format json");
    CHECK(r.exit_code == 0);
    INFO("space ", n);
    CHECK(r.out == read_file(std::filesystem::path(TCBOUND_GOLDEN_DIR) /
                             ("space_" + n + ".json")));
  }
}

TEST_CASE("map reports match their golden files") {
  for (const auto& n : catalog_map_names()) {
    auto r = run_cli("map --builtin " + n + " --format json");
    CHECK(r.exit_code == 0);
    std::string file = n;
    for (auto& c : file)
      if (c == ':') c = '_';
    INFO("map ", n);
    CHECK(r.out == read_file(std::filesystem::path(TCBOUND_GOLDEN_DIR) /
                             ("map_" + file + ".json")));
  }
}

TEST_CASE("reports are deterministic") {
  auto a = run_cli("space --builtin rp2 --format json");
  auto b = run_cli("space --builtin rp2 --format json");
  CHECK(a.out == b.out);
  auto c = run_cli("map --builtin s2_to_rp2 --format json");
  auto d = run_cli("map --builtin s2_to_rp2 --format json");
  CHECK(c.out == d.out);
}

TEST_CASE("markdown output carries the headline intervals") {
  auto r = run_cli("space --builtin torus --field q");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("cat: [3, 3]") != std::string::npos);
  CHECK(r.out.find("TC: [3, 3]") != std::string::npos);

  auto m = run_cli("map --builtin circle_double_cover --field q");
  CHECK(m.exit_code == 0);
  CHECK(m.out.find("TC(f): [2, 2]") != std::string::npos);
}

TEST_CASE("catalog listing and show") {
  auto list = run_cli("catalog list");
  CHECK(list.exit_code == 0);
  int spaces = 0, maps = 0;
  std::istringstream ss(list.out);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.rfind("space ", 0) == 0) ++spaces;
    if (line.rfind("map ", 0) == 0) ++maps;
  }
  CHECK(spaces >= 8);
  CHECK(maps >= 5);

  auto rp2 = run_cli("catalog show rp2");
  CHECK(rp2.exit_code == 0);
  CHECK(rp2.out.find("chi 1") != std::string::npos);
  CHECK(rp2.out.find("facets:") != std::string::npos);

  auto dc = run_cli("catalog show circle_double_cover");
  CHECK(dc.exit_code == 0);
  CHECK(dc.out.find("->") != std::string::npos);
}

TEST_CASE("exit codes: parse, validation, inconsistency, surjectivity") {
  auto bad_json = temp_file("tcbound_bad.json", "{ not json");
  CHECK(run_cli("space " + bad_json.string()).exit_code == 2);

  auto bad_complex = temp_file("tcbound_badc.json", R"({"facets": [["a","a"]]})");
  CHECK(run_cli("space " + bad_complex.string()).exit_code == 3);

  // sphere2 is simply connected; asserting connectivity 0 contradicts homology
  CHECK(run_cli("space --builtin sphere2 --assert connectivity:0").exit_code ==
        4);

  auto circle = complex_json(builtin_space("circle").complex);
  auto circle_file = temp_file("tcbound_circle.json", circle.dump());
  Json inclusion;
  inclusion["domain"] =
      temp_file("tcbound_path.json", R"({"facets": [["x","y"]]})").string();
  inclusion["codomain"] = circle_file.string();
  inclusion["vertex_map"] = {{"x", "a"}, {"y", "b"}};
  auto map_file = temp_file("tcbound_incl.json", inclusion.dump());
  CHECK(run_cli("map " + map_file.string()).exit_code == 5);
}

TEST_CASE("round-trip: serialized catalog complexes analyze identically") {
  for (const char* n : {"circle", "rp2", "torus"}) {
    auto e = builtin_space(n);
    auto reloaded = parse_complex(complex_json(e.complex));
    std::vector<FieldSpec> fields = {FieldSpec::rationals(),
                                     FieldSpec::prime(2)};
    auto a = analyze_space(e.complex, e.spec, fields);
    auto b = analyze_space(reloaded, e.spec, fields);
    CHECK(space_body_json(e.complex, e.spec, a) ==
          space_body_json(reloaded, e.spec, b));
  }
}

TEST_CASE("map files accept builtin space names and assertion lists") {
  Json j;
  j["domain"] = "circle";
  j["codomain"] = "circle";
  Json vm;
  for (const auto& v : builtin_space("circle").complex.vertices) vm[v] = v;
  j["vertex_map"] = vm;
  j["assertions"] = {"fibration", "section"};
  auto f = temp_file("tcbound_id.json", j.dump());
  auto r = run_cli("map " + f.string() + " --format json");
  CHECK(r.exit_code == 0);
  auto rep = Json::parse(r.out);
  CHECK(rep["schema"] == "tcbound-report/1");
  CHECK(rep["tc_map"]["lo"] == 2);
  CHECK(rep["tc_map"]["hi"] == 2);
}
