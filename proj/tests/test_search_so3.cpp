#include <doctest.h>

#include <cmath>
#include <random>

#include "icosa/icosa_geometry.hpp"
#include "icosa/search_so3.hpp"

using namespace icosa;

namespace {

std::mt19937_64 rng(20240822);

Cubic<double> random_harmonic_d() {
  std::normal_distribution<double> gauss(0, 1);
  Cubic<double> p;
  for (auto& c : p.coeffs) c = gauss(rng);
  return harmonic_projection(p);
}

Quat random_quat() {
  std::normal_distribution<double> gauss(0, 1);
  Quat q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
  q.normalize();
  return q;
}

double axis_match(const std::array<std::array<double, 3>, 6>& found,
                  const std::array<std::array<double, 3>, 6>& expected) {
  double worst = 0;
  for (auto& e : expected) {
    double best = 1e300;
    for (auto& f : found) {
      double dp = 0, dm = 0;
      for (int k = 0; k < 3; ++k) {
        dp += (e[k] - f[k]) * (e[k] - f[k]);
        dm += (e[k] + f[k]) * (e[k] + f[k]);
      }
      best = std::min(best, std::min(dp, dm));
    }
    worst = std::max(worst, best);
  }
  return std::sqrt(worst);
}

std::array<std::array<double, 3>, 6> rotated_axes(const Mat3d& r) {
  std::array<std::array<double, 3>, 6> out{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += r[j][k] * unit_axes()[i][k];
  return out;
}

Cubic<double> special_form_e3() {
  // x2 (x3^2 - (1/5)(x,x)): harmonic, nodal set contains every icosahedron
  // with a vertex on the x3 axis.
  Cubic<double> f;
  f.coeffs[8] = 0.8;   // x2 x3^2
  f.coeffs[1] = -0.2;  // x1^2 x2
  f.coeffs[6] = -0.2;  // x2^3
  return f;
}

}  // namespace

TEST_CASE("residual vanishes on both icosahedra of x1x2x3") {
  auto f = Cubic<double>::xyz();
  CHECK(residual(f, Quat{1, 0, 0, 0}).value == doctest::Approx(0).epsilon(1e-14));
  // Quarter turn about x3 gives the second icosahedron (0, +-1, +-phi) etc.
  double s = std::sqrt(0.5);
  CHECK(residual(f, Quat{s, 0, 0, s}).value < 1e-28);
}

TEST_CASE("analytic gradient agrees with central differences") {
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_harmonic_d();
    if (std::sqrt(bombieri_norm_sq(f)) < 1e-3) continue;
    Quat q = random_quat();
    auto ev = residual(f, q);
    double h = 1e-6;
    double scale = std::max(1.0, std::abs(ev.value));
    for (int j = 0; j < 3; ++j) {
      std::array<double, 3> xi{};
      xi[j] = h;
      double plus = residual(f, quat_step(xi, q)).value;
      xi[j] = -h;
      double minus = residual(f, quat_step(xi, q)).value;
      double fd = (plus - minus) / (2 * h);
      CHECK(std::abs(fd - ev.gradient[j]) < 1e-5 * std::max(scale, std::abs(fd)));
    }
  }
}

TEST_CASE("x1x2x3 has exactly two icosahedra at the expected axes") {
  auto out = find_icosahedra(Cubic<double>::xyz());
  REQUIRE(out.icosahedra.size() == 2);
  CHECK_FALSE(out.family.has_value());
  Mat3d id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Mat3d quarter{{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}};
  auto std_axes = rotated_axes(id);
  auto rot_axes = rotated_axes(quarter);
  double d_std = std::min(axis_match(out.icosahedra[0].axes, std_axes),
                          axis_match(out.icosahedra[1].axes, std_axes));
  double d_rot = std::min(axis_match(out.icosahedra[0].axes, rot_axes),
                          axis_match(out.icosahedra[1].axes, rot_axes));
  CHECK(d_std < 1e-8);
  CHECK(d_rot < 1e-8);
  for (auto& sol : out.icosahedra) CHECK(sol.max_residual < 1e-8);
}

TEST_CASE("the Legendre axis harmonic has no icosahedron") {
  Cubic<double> f = axis_harmonic(Vec3<double>{0, 0, 1});
  auto out = find_icosahedra(f);
  CHECK(out.icosahedra.empty());
  CHECK_FALSE(out.family.has_value());
}

TEST_CASE("the degenerate form yields a common-vertex family") {
  auto out = find_icosahedra(special_form_e3());
  REQUIRE(out.family.has_value());
  // Common vertex axis parallel to e3.
  auto a = out.family->common_axis;
  CHECK(std::abs(std::abs(a[2]) - 1) < 1e-6);
  CHECK(std::abs(a[0]) < 1e-6);
  CHECK(std::abs(a[1]) < 1e-6);
  REQUIRE(out.family->samples.size() == 8);
  for (auto& s : out.family->samples) CHECK(s.max_residual < 1e-9);
}

TEST_CASE("dedup collapses equal axis sets modulo sign and ordering") {
  auto out = find_icosahedra(Cubic<double>::xyz());
  REQUIRE(out.icosahedra.size() == 2);
  FoundIcosahedron copy = out.icosahedra[0];
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 3; ++k)
      copy.axes[i][k] = -out.icosahedra[0].axes[(i + 1) % 6][k];
  auto reps = dedup({out.icosahedra[0], copy, out.icosahedra[1]}, 1e-6);
  CHECK(reps.size() == 2);
}

TEST_CASE("conic family cubics have exactly the standard and rotated solution") {
  for (auto [a, b] : {std::pair{1, 1}, {2, -3}, {1, 4}}) {
    auto f = conic_family_cubic(Rational(a), Rational(b)).cast<double>();
    auto out = find_icosahedra(f);
    REQUIRE(out.icosahedra.size() == 2);
    CHECK_FALSE(out.family.has_value());
    double theta = second_icosahedron_angle(a, b);
    double ct = std::cos(theta), st = std::sin(theta);
    Mat3d id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    Mat3d rot{{{ct, st, 0}, {-st, ct, 0}, {0, 0, 1}}};
    double d_std = std::min(axis_match(out.icosahedra[0].axes, rotated_axes(id)),
                            axis_match(out.icosahedra[1].axes, rotated_axes(id)));
    double d_rot = std::min(axis_match(out.icosahedra[0].axes, rotated_axes(rot)),
                            axis_match(out.icosahedra[1].axes, rotated_axes(rot)));
    CHECK(d_std < 1e-7);
    CHECK(d_rot < 1e-7);
  }
}

TEST_CASE("search is equivariant under rotation of the input") {
  for (int trial = 0; trial < 3; ++trial) {
    Quat q = random_quat();
    Mat3d r = quat_to_matrix(q);
    auto f = Cubic<double>::xyz();
    // (R.f)(x) = f(R^T x).
    std::array<std::array<double, 3>, 3> rt;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) rt[i][j] = r[j][i];
    auto rf = f.compose_linear(rt);
    auto base = find_icosahedra(f);
    auto moved = find_icosahedra(rf);
    REQUIRE(base.icosahedra.size() == 2);
    REQUIRE(moved.icosahedra.size() == 2);
    for (auto& sol : base.icosahedra) {
      std::array<std::array<double, 3>, 6> image{};
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) image[i][j] += r[j][k] * sol.axes[i][k];
      double best = std::min(axis_match(moved.icosahedra[0].axes, image),
                             axis_match(moved.icosahedra[1].axes, image));
      CHECK(best < 1e-6);
    }
  }
}
