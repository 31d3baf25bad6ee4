#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "icosa/json_io.hpp"
#include "icosa/nodal_mesh.hpp"

using namespace icosa;

namespace {

int run_cli(const std::string& args) {
#ifdef ICOSA_CLI_PATH
  std::string cmd = std::string(ICOSA_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
#else
  (void)args;
  return -1;
#endif
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/icosa_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("cubic json round trip is exact") {
  Cubic<Rational> r;
  r.coeffs[4] = Rational(1);
  r.coeffs[0] = Rational(-7, 3);
  AnyCubic c{r};
  auto back = cubic_from_json(cubic_to_json(c));
  CHECK(std::get<Cubic<Rational>>(back) == r);

  Cubic<Golden> g;
  g.coeffs[2] = Golden::phi();
  g.coeffs[9] = Golden(Rational(1, 2), Rational(-3, 7));
  auto gback = cubic_from_json(cubic_to_json(AnyCubic{g}));
  CHECK(std::get<Cubic<Golden>>(gback) == g);

  Cubic<double> d;
  d.coeffs[5] = 0.1234567890123456789;
  auto dback = cubic_from_json(cubic_to_json(AnyCubic{d}));
  CHECK(std::get<Cubic<double>>(dback) == d);
}

TEST_CASE("malformed cubic files are rejected") {
  CHECK_THROWS_AS(cubic_from_json(Json{{"scalar", "rational"},
                                       {"coeffs", Json::array({1, 2, 3})}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cubic_from_json(Json{{"coeffs", Json::array()}}), std::invalid_argument);
  Json bad{{"scalar", "octonion"}, {"coeffs", Json::array({0, 0, 0, 0, 1, 0, 0, 0, 0, 0})}};
  CHECK_THROWS_AS(cubic_from_json(bad), std::invalid_argument);
}

TEST_CASE("json parsing of the spec'd example forms") {
  Json j = Json::parse(R"({"scalar":"rational","coeffs":[0,0,0,0,"1",0,0,0,0,0]})");
  auto c = cubic_from_json(j);
  CHECK(std::get<Cubic<Rational>>(c) == Cubic<Rational>::xyz());
}

TEST_CASE("nodal mesh of the Legendre harmonic: three latitude circles") {
  Cubic<double> f = axis_harmonic(Vec3<double>{0, 0, 1});
  double fnorm = std::sqrt(bombieri_norm_sq(f));
  auto mesh = nodal_mesh(f, 48);
  CHECK(mesh.vertices.size() > 100);
  CHECK(mesh.segments.size() > 100);
  double band = std::sqrt(3.0 / 5.0);
  for (auto& v : mesh.vertices) {
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    CHECK(std::abs(n - 1) < 1e-12);
    CHECK(std::abs(f.evaluate(v)) < 1e-6 * fnorm);
    // Every vertex sits on one of the circles x3 in {0, +-sqrt(3/5)}.
    double d = std::min({std::abs(v[2]), std::abs(v[2] - band), std::abs(v[2] + band)});
    CHECK(d < 1e-6);
  }
}

TEST_CASE("nodal mesh of x1x2x3: three great circles") {
  Cubic<double> f = Cubic<double>::xyz();
  auto mesh = nodal_mesh(f, 48);
  CHECK(mesh.segments.size() > 100);
  for (auto& v : mesh.vertices) {
    CHECK(std::abs(f.evaluate(v)) < 1e-6);
    // On a coordinate plane.
    double d = std::min({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
    CHECK(d < 1e-6);
  }
  // All three planes are represented.
  bool seen[3] = {false, false, false};
  for (auto& v : mesh.vertices)
    for (int k = 0; k < 3; ++k)
      if (std::abs(v[k]) < 1e-6 && std::abs(v[(k + 1) % 3]) > 0.3) seen[k] = true;
  CHECK(seen[0]);
  CHECK(seen[1]);
  CHECK(seen[2]);
}

TEST_CASE("obj export emits vertices and polylines") {
  auto mesh = nodal_mesh(Cubic<double>::xyz(), 16);
  std::string obj = mesh_to_obj(mesh);
  CHECK(obj.find("v ") == 0);
  CHECK(obj.find("l ") != std::string::npos);
}

#ifdef ICOSA_CLI_PATH

TEST_CASE("cli exit codes: 0 consistent, 2 usage, 3 inconsistent") {
  std::string xyz =
      write_temp("xyz.json", R"({"scalar":"rational","coeffs":[0,0,0,0,"1",0,0,0,0,0]})");
  CHECK(run_cli("classify " + xyz) == 0);

  std::string bad = write_temp("bad.json", R"({"scalar":"rational","coeffs":[1,2,3]})");
  CHECK(run_cli("classify " + bad) == 2);
  CHECK(run_cli("classify /nonexistent.json") == 2);
  CHECK(run_cli("frobnicate") == 2);

  // The degenerate family member: printed J < 0 but a family exists, so
  // classification is honestly inconsistent (exit 3).
  std::string special = write_temp(
      "special.json",
      R"({"scalar":"rational","coeffs":[0,"-1/5",0,0,0,0,"-1/5",0,"4/5",0]})");
  CHECK(run_cli("classify " + special) == 3);

  CHECK(run_cli("verify all --samples 5") == 0);
}

TEST_CASE("cli nodal-mesh and random-harmonic write artifacts") {
  std::string xyz =
      write_temp("xyz2.json", R"({"scalar":"rational","coeffs":[0,0,0,0,"1",0,0,0,0,0]})");
  CHECK(run_cli("nodal-mesh " + xyz + " --resolution 16 -o /tmp/icosa_test_mesh.json") == 0);
  std::ifstream mesh_in("/tmp/icosa_test_mesh.json");
  Json mesh_json;
  mesh_in >> mesh_json;
  CHECK(mesh_json.at("vertices").size() > 10);
  // Markers: 12 vertices for each of the two icosahedra.
  CHECK(mesh_json.at("markers").size() == 24);

  CHECK(run_cli("random-harmonic --seed 42 -o /tmp/icosa_test_rand.json") == 0);
  std::ifstream rand_in("/tmp/icosa_test_rand.json");
  Json rand_json;
  rand_in >> rand_json;
  auto c = cubic_from_json(rand_json);
  auto f = std::get<Cubic<double>>(c);
  auto l = laplacian(f);
  CHECK(std::abs(l[0]) + std::abs(l[1]) + std::abs(l[2]) < 1e-12);
  CHECK(rand_json.at("seed") == 42);
}

#endif
