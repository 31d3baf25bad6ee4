#include <doctest.h>

#include <cmath>
#include <random>

#include "icosa/sphere_integrals.hpp"

using namespace icosa;

namespace {

std::mt19937_64 rng(20240819);

Rational random_rational() {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  return Rational(num(rng), den(rng));
}

Cubic<Rational> random_harmonic() {
  Cubic<Rational> p;
  for (auto& c : p.coeffs) c = random_rational();
  return harmonic_projection(p);
}

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = t;
    double p0 = 1, p1 = t;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (t * p1 - p0) / (t * t - 1);
    w[i] = 2 / ((1 - t * t) * dp * dp);
  }
}

// Product-grid quadrature oracle over the unit sphere, test-only.
double quadrature(const Poly<double>& p) {
  static std::vector<double> ct, wt;
  if (ct.empty()) gauss_legendre(64, ct, wt);
  double total = 0;
  int nphi = 128;
  for (int i = 0; i < 64; ++i) {
    double c = ct[i], s = std::sqrt(1 - c * c);
    double ring = 0;
    for (int j = 0; j < nphi; ++j) {
      double phi = 2 * M_PI * j / nphi;
      ring += p.evaluate(std::array<double, 3>{s * std::cos(phi), s * std::sin(phi), c});
    }
    total += wt[i] * ring * (2 * M_PI / nphi);
  }
  return total;
}

}  // namespace

TEST_CASE("monomial integrals, base cases") {
  CHECK(integrate_monomial(0, 0, 0) == PiRational(Rational(4), 1));
  CHECK(integrate_monomial(2, 0, 0) == PiRational(Rational(4, 3), 1));
  CHECK(integrate_monomial(2, 2, 2) == PiRational(Rational(4, 105), 1));
  CHECK(integrate_monomial(1, 0, 0).is_zero());
  CHECK(integrate_monomial(3, 2, 1).is_zero());
}

TEST_CASE("c_n constants") {
  CHECK(c_constant(1) == PiRational(Rational(4, 3), 1));
  CHECK(c_constant(3) == PiRational(Rational(4, 105), 1));
  CHECK(c_constant(4) == PiRational(Rational(4, 945), 1));
  CHECK(c_constant(3).coeff() / c_constant(4).coeff() == Rational(9));
}

TEST_CASE("pairing formula on coordinate vectors") {
  Vec3<Rational> e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  CHECK(linear_product_integral<Rational>({e3, e3}) == PiRational(Rational(4, 3), 1));
  CHECK(linear_product_integral<Rational>({e1, e1, e2, e2, e3, e3}) ==
        PiRational(Rational(4, 105), 1));
  CHECK(linear_product_integral<Rational>({e3, e3, e3, e3, e3, e3}) ==
        PiRational(Rational(4, 7), 1));
}

TEST_CASE("pairing formula agrees with monomial integration") {
  std::uniform_int_distribution<int> axis(0, 2), count(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    int n = count(rng);
    std::vector<Vec3<Rational>> vecs;
    int e[3] = {0, 0, 0};
    for (int i = 0; i < 2 * n; ++i) {
      int a = axis(rng);
      e[a]++;
      Vec3<Rational> v{0, 0, 0};
      v[a] = 1;
      vecs.push_back(v);
    }
    CHECK(linear_product_integral(vecs) == integrate_monomial(e[0], e[1], e[2]));
  }
}

TEST_CASE("moment matrices of x1x2x3") {
  auto mp = moment_matrices(Cubic<Rational>::xyz());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(mp.S_mat[i][j] == (i == j ? PiRational(Rational(4, 315), 1) : PiRational()));
      CHECK(mp.M_mat[i][j] == (i == j ? PiRational(Rational(4, 1575), 1) : PiRational()));
    }
}

TEST_CASE("moment matrices of the Legendre axis harmonic") {
  auto mp = moment_matrices(axis_harmonic(Vec3<Rational>{0, 0, 1}));
  Rational base(1, 7875);
  CHECK(mp.S_mat[0][0] == PiRational(176 * base, 1));
  CHECK(mp.S_mat[1][1] == PiRational(176 * base, 1));
  CHECK(mp.S_mat[2][2] == PiRational(368 * base, 1));
  CHECK(mp.M_mat[0][0] == PiRational(-16 * base, 1));
  CHECK(mp.M_mat[1][1] == PiRational(-16 * base, 1));
  CHECK(mp.M_mat[2][2] == PiRational(176 * base, 1));
  CHECK(mp.S_mat[0][1].is_zero());
}

TEST_CASE("trace identity and positive semidefiniteness") {
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_harmonic();
    auto mp = moment_matrices(f);
    PiRational norm = integrate_poly(f.to_poly() * f.to_poly());
    CHECK(mp.trace_M() == frac<Rational>(1, 5) * norm);
    // PSD via exact leading principal minors of the coefficient matrix.
    Matrix<Rational> s(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s(i, j) = mp.S_mat[i][j].coeff();
    CHECK(s(0, 0) >= 0);
    Matrix<Rational> s2(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) s2(i, j) = s(i, j);
    CHECK(s2.determinant() >= 0);
    CHECK(s.determinant() >= 0);
  }
}

TEST_CASE("exact integration agrees with the quadrature oracle") {
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_harmonic();
    Cubic<double> fd = f.cast<double>();
    auto mp = moment_matrices(f);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        Poly<double> integrand =
            fd.to_poly() * fd.to_poly() * Poly<double>::variable(i) * Poly<double>::variable(j);
        double oracle = quadrature(integrand);
        double exact = mp.S_mat[i][j].to_double();
        CHECK(std::abs(oracle - exact) < 1e-9 * (1 + std::abs(exact)));
      }
  }
}

TEST_CASE("float path matches the exact path") {
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_harmonic();
    auto mp = moment_matrices(f);
    auto [sd, md] = moment_matrices_d(f.cast<double>());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double exact = mp.M_mat[i][j].to_double();
        CHECK(std::abs(md[i][j] - exact) <= 1e-12 * (1 + std::abs(exact)));
      }
  }
}
