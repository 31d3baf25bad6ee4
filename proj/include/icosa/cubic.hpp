#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "icosa/golden.hpp"
#include "icosa/linalg.hpp"
#include "icosa/poly.hpp"
#include "icosa/rational.hpp"

namespace icosa {

template <typename S>
using Vec3 = std::array<S, 3>;

template <typename S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <typename S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline double sign(double x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }
inline double to_double(double x) { return x; }

/// n/d as an element of the scalar field S.
template <typename S>
S frac(int n, int d) {
  return S(n) / S(d);
}
template <>
inline Rational frac<Rational>(int n, int d) { return Rational(n, d); }
template <>
inline double frac<double>(int n, int d) { return double(n) / double(d); }

template <typename To, typename From>
To scalar_cast(const From& x);

template <> inline Rational scalar_cast(const Rational& x) { return x; }
template <> inline Golden scalar_cast(const Golden& x) { return x; }
template <> inline double scalar_cast(const double& x) { return x; }
template <> inline Golden scalar_cast(const Rational& x) { return Golden(x); }
template <> inline double scalar_cast(const Rational& x) { return to_double(x); }
template <> inline double scalar_cast(const Golden& x) { return x.to_double(); }

template <typename To, typename From>
Vec3<To> vec_cast(const Vec3<From>& v) {
  return {scalar_cast<To, From>(v[0]), scalar_cast<To, From>(v[1]),
          scalar_cast<To, From>(v[2])};
}

/// Fixed monomial order for degree-3 coefficient vectors. All I/O and all
/// linear algebra over the 10-dimensional cubic space use this order.
inline constexpr std::array<std::array<int, 3>, 10> kCubicMonomials = {{
    {3, 0, 0},  // x1^3
    {2, 1, 0},  // x1^2 x2
    {2, 0, 1},  // x1^2 x3
    {1, 2, 0},  // x1 x2^2
    {1, 1, 1},  // x1 x2 x3
    {1, 0, 2},  // x1 x3^2
    {0, 3, 0},  // x2^3
    {0, 2, 1},  // x2^2 x3
    {0, 1, 2},  // x2 x3^2
    {0, 0, 3},  // x3^3
}};

inline int monomial_index(int i, int j, int k) {
  for (int m = 0; m < 10; ++m)
    if (kCubicMonomials[m][0] == i && kCubicMonomials[m][1] == j &&
        kCubicMonomials[m][2] == k)
      return m;
  throw std::invalid_argument("not a degree-3 monomial");
}

/// Homogeneous degree-3 polynomial on R^3.
template <typename S>
struct Cubic {
  std::array<S, 10> coeffs{};

  static Cubic monomial(int idx, S c = S(1)) {
    Cubic q;
    q.coeffs[idx] = std::move(c);
    return q;
  }
  /// x1 x2 x3
  static Cubic xyz() { return monomial(4); }

  bool is_zero() const {
    for (auto& c : coeffs)
      if (!(c == S(0))) return false;
    return true;
  }

  Cubic operator-() const {
    Cubic r;
    for (int i = 0; i < 10; ++i) r.coeffs[i] = -coeffs[i];
    return r;
  }
  Cubic& operator+=(const Cubic& o) {
    for (int i = 0; i < 10; ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  Cubic& operator-=(const Cubic& o) {
    for (int i = 0; i < 10; ++i) coeffs[i] -= o.coeffs[i];
    return *this;
  }
  Cubic& operator*=(const S& c) {
    for (auto& v : coeffs) v *= c;
    return *this;
  }
  friend Cubic operator+(Cubic x, const Cubic& y) { return x += y; }
  friend Cubic operator-(Cubic x, const Cubic& y) { return x -= y; }
  friend Cubic operator*(const S& c, Cubic p) { return p *= c; }
  friend bool operator==(const Cubic& x, const Cubic& y) { return x.coeffs == y.coeffs; }

  template <typename V>
  auto evaluate(const V& x) const {
    using R = std::decay_t<decltype(x[0])>;
    R total(0);
    for (int m = 0; m < 10; ++m) {
      R t(1);
      for (int v = 0; v < 3; ++v)
        for (int k = 0; k < kCubicMonomials[m][v]; ++k) t *= x[v];
      if constexpr (std::is_same_v<R, S>) {
        total += coeffs[m] * t;
      } else {
        total += scalar_cast<R, S>(coeffs[m]) * t;
      }
    }
    return total;
  }

  Poly<S> to_poly() const {
    Poly<S> p;
    for (int m = 0; m < 10; ++m) p.add_term(kCubicMonomials[m], coeffs[m]);
    return p;
  }

  static Cubic from_poly(const Poly<S>& p) {
    Cubic q;
    for (auto& [e, c] : p.terms()) {
      if (e[0] + e[1] + e[2] != 3) throw std::invalid_argument("poly is not a cubic");
      q.coeffs[monomial_index(e[0], e[1], e[2])] = c;
    }
    return q;
  }

  template <typename To>
  Cubic<To> cast() const {
    Cubic<To> q;
    for (int i = 0; i < 10; ++i) q.coeffs[i] = scalar_cast<To, S>(coeffs[i]);
    return q;
  }

  /// Pullback p(M x), i.e. coefficients of the composed cubic.
  Cubic compose_linear(const std::array<std::array<S, 3>, 3>& m) const {
    return from_poly(to_poly().substitute_linear(m));
  }
};

/// Coefficients (l1, l2, l3) of the linear form Laplacian(p).
template <typename S>
Vec3<S> laplacian(const Cubic<S>& p) {
  const auto& c = p.coeffs;
  return {S(6) * c[0] + S(2) * c[3] + S(2) * c[5],
          S(2) * c[1] + S(6) * c[6] + S(2) * c[8],
          S(2) * c[2] + S(2) * c[7] + S(6) * c[9]};
}

template <typename S>
bool is_harmonic(const Cubic<S>& p) {
  auto l = laplacian(p);
  return l[0] == S(0) && l[1] == S(0) && l[2] == S(0);
}

/// (x,x)*(l,x) in the fixed coefficient order.
template <typename S>
Cubic<S> radial_times_linear(const Vec3<S>& l) {
  Cubic<S> q;
  q.coeffs = {l[0], l[1], l[2], l[0], S(0), l[0], l[1], l[2], l[1], l[2]};
  return q;
}

/// Orthogonal projection onto the harmonic cubics: p - (x,x)*Laplacian(p)/10.
template <typename S>
Cubic<S> harmonic_projection(const Cubic<S>& p) {
  auto l = laplacian(p);
  Vec3<S> scaled{l[0] * frac<S>(1, 10), l[1] * frac<S>(1, 10), l[2] * frac<S>(1, 10)};
  return p - radial_times_linear(scaled);
}

/// (a,x)^3 expanded into coefficients.
template <typename S>
Cubic<S> linear_cubed(const Vec3<S>& a) {
  Cubic<S> q;
  for (int m = 0; m < 10; ++m) {
    auto e = kCubicMonomials[m];
    static constexpr int fact[4] = {1, 1, 2, 6};
    int multinom = 6 / (fact[e[0]] * fact[e[1]] * fact[e[2]]);
    S t(multinom);
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < e[v]; ++k) t *= a[v];
    q.coeffs[m] = t;
  }
  return q;
}

/// The axis harmonic f_a(x) = (a,x)^3 - (3/5)(a,a)(a,x)(x,x), the unique
/// harmonic cubic symmetric about the axis a.
template <typename S>
Cubic<S> axis_harmonic(const Vec3<S>& a) {
  if (a[0] == S(0) && a[1] == S(0) && a[2] == S(0))
    throw std::invalid_argument("axis_harmonic: zero axis");
  S aa = dot(a, a) * frac<S>(3, 5);
  Vec3<S> l{a[0] * aa, a[1] * aa, a[2] * aa};
  return linear_cubed(a) - radial_times_linear(l);
}

/// Bombieri-type inner product normalized so that (p(x), (a,x)^3) = p(a).
/// The monomial Gram matrix is diagonal with weight alpha!/3!.
template <typename S>
S bombieri_inner(const Cubic<S>& p, const Cubic<S>& q) {
  S total(0);
  for (int m = 0; m < 10; ++m) {
    auto e = kCubicMonomials[m];
    static constexpr int fact[4] = {1, 1, 2, 6};
    int denom = 6 / (fact[e[0]] * fact[e[1]] * fact[e[2]]);
    total += p.coeffs[m] * q.coeffs[m] * frac<S>(1, denom);
  }
  return total;
}

template <typename S>
S bombieri_norm_sq(const Cubic<S>& p) {
  return bombieri_inner(p, p);
}

/// Infinitesimal rotation action u.f = (x x u, grad f) = x . (u x grad f).
/// Preserves the harmonic cubics and is linear in both arguments.
template <typename S>
Cubic<S> lie_action(const Vec3<S>& u, const Cubic<S>& p) {
  Poly<S> f = p.to_poly();
  std::array<Poly<S>, 3> grad = {f.derivative(0), f.derivative(1), f.derivative(2)};
  // (u x grad f)_i, then dot with x.
  Poly<S> out;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    Poly<S> comp = u[j] * grad[k] - u[k] * grad[j];
    out += Poly<S>::variable(i) * comp;
  }
  return Cubic<S>::from_poly(out);
}

/// A basis of the 7-dimensional space H of harmonic cubics together with
/// its exact Bombieri Gram matrix.
template <typename S>
struct HBasis {
  std::vector<Cubic<S>> elements;
  Matrix<S> gram;
};

template <typename S>
HBasis<S> standard_h_basis() {
  // Harmonic projections of x1^3, x2^3, x3^3, x1 x2^2, x2 x3^2, x3 x1^2, x1x2x3.
  static constexpr int seeds[7] = {0, 6, 9, 3, 8, 2, 4};
  HBasis<S> b;
  for (int s : seeds) b.elements.push_back(harmonic_projection(Cubic<S>::monomial(s)));
  std::vector<std::vector<S>> rows;
  for (auto& e : b.elements)
    rows.emplace_back(e.coeffs.begin(), e.coeffs.end());
  if (span_rank(rows) != 7)
    throw std::logic_error("standard_h_basis: rank != 7");
  b.gram = Matrix<S>(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      b.gram(i, j) = bombieri_inner(b.elements[i], b.elements[j]);
  return b;
}

}  // namespace icosa
