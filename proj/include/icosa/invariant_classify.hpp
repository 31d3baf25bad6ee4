#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "icosa/cubic.hpp"
#include "icosa/pi_scalar.hpp"
#include "icosa/search_so3.hpp"
#include "icosa/sphere_integrals.hpp"

namespace icosa {

/// Characteristic-polynomial data of the moment matrix M and the sextic
/// invariant J = 3 a3 - 4 a1 a2. For exact scalar types the sign is exact.
template <typename S>
struct JReport {
  PiScalar<S> a1, a2, a3;  // x^3 + a1 x^2 + a2 x + a3
  PiScalar<S> J;
  int sign = 0;
  double normalized_J = 0;  // J / (integral of f^2)^3, filled by j_invariant
};

template <typename S>
JReport<S> char_poly_j(const PiMat3<S>& m) {
  JReport<S> rep;
  rep.a1 = -(m[0][0] + m[1][1] + m[2][2]);
  rep.a2 = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) +
           (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
           (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  PiScalar<S> det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  rep.a3 = -det;
  rep.J = frac<S>(3, 1) * rep.a3 - frac<S>(4, 1) * (rep.a1 * rep.a2);
  rep.sign = rep.J.sgn();
  return rep;
}

/// J of a harmonic cubic through the exact moment matrices; normalized_J
/// divides by the cube of the squared sphere norm, making it scale-free.
template <typename S>
JReport<S> j_invariant(const Cubic<S>& f) {
  if (!is_harmonic(f)) {
    auto l = laplacian(f);
    throw std::invalid_argument("j_invariant: cubic is not harmonic, laplacian (" +
                                std::to_string(to_double(l[0])) + ", " +
                                std::to_string(to_double(l[1])) + ", " +
                                std::to_string(to_double(l[2])) + ")*x");
  }
  auto mp = moment_matrices(f);
  auto rep = char_poly_j<S>(mp.M_mat);
  PiScalar<S> norm = integrate_poly(f.to_poly() * f.to_poly());
  double n = norm.to_double();
  rep.normalized_J = n > 0 ? rep.J.to_double() / (n * n * n) : 0;
  return rep;
}

/// Float-path J for double-coefficient input.
struct JReportD {
  double a1 = 0, a2 = 0, a3 = 0, J = 0;
  int sign = 0;
  double normalized_J = 0;
};

inline JReportD j_invariant_d(const Cubic<double>& f) {
  auto [s, m] = moment_matrices_d(f);
  JReportD rep;
  rep.a1 = -(m[0][0] + m[1][1] + m[2][2]);
  rep.a2 = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) +
           (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
           (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  rep.a3 = -det;
  rep.J = 3 * rep.a3 - 4 * rep.a1 * rep.a2;
  rep.sign = rep.J < 0 ? -1 : (rep.J > 0 ? 1 : 0);
  // Squared sphere norm = 5 tr M (trace identity), or directly S's trace/?
  double tr_s = s[0][0] + s[1][1] + s[2][2];
  double norm = tr_s;  // integral of f^2 |x|^2 = integral of f^2 on S^2
  rep.normalized_J = norm > 0 ? rep.J / (norm * norm * norm) : 0;
  return rep;
}

/// Degenerate member of the theorem's family:
/// f = scale * (u,x)((a,x)^2 - (x,x)(a,a)/5) with unit a, unit u, (u,a)=0.
struct SpecialForm {
  std::array<double, 3> a;
  std::array<double, 3> u;
  double scale = 0;
  double residual = 0;  // Bombieri distance from the normalized input
};

namespace detail {

/// Cubic of the special family for unit axis a and weight vector w (in the
/// plane orthogonal to a): (w,x)((a,x)^2 - (x,x)/5).
inline Cubic<double> special_form_cubic(const std::array<double, 3>& a,
                                        const std::array<double, 3>& w) {
  Poly<double> lin_w, lin_a, radial;
  for (int i = 0; i < 3; ++i) {
    lin_w += w[i] * Poly<double>::variable(i);
    lin_a += a[i] * Poly<double>::variable(i);
    radial += Poly<double>::variable(i) * Poly<double>::variable(i);
  }
  Poly<double> quad = lin_a * lin_a - 0.2 * radial;
  return Cubic<double>::from_poly(lin_w * quad);
}

/// Best-fit residual for a fixed axis: least squares over w in the
/// orthogonal plane of a (2-dimensional linear problem, Bombieri metric).
inline double special_axis_residual(const Cubic<double>& f, const std::array<double, 3>& a,
                                    std::array<double, 3>* best_w = nullptr) {
  // Orthonormal basis of the plane orthogonal to a.
  std::array<double, 3> t = std::abs(a[0]) < 0.9 ? std::array<double, 3>{1, 0, 0}
                                                 : std::array<double, 3>{0, 1, 0};
  std::array<double, 3> v1{a[1] * t[2] - a[2] * t[1], a[2] * t[0] - a[0] * t[2],
                           a[0] * t[1] - a[1] * t[0]};
  double n1 = std::sqrt(v1[0] * v1[0] + v1[1] * v1[1] + v1[2] * v1[2]);
  for (auto& c : v1) c /= n1;
  std::array<double, 3> v2{a[1] * v1[2] - a[2] * v1[1], a[2] * v1[0] - a[0] * v1[2],
                           a[0] * v1[1] - a[1] * v1[0]};

  Cubic<double> b1 = special_form_cubic(a, v1), b2 = special_form_cubic(a, v2);
  double g11 = bombieri_inner(b1, b1), g12 = bombieri_inner(b1, b2),
         g22 = bombieri_inner(b2, b2);
  double r1 = bombieri_inner(f, b1), r2 = bombieri_inner(f, b2);
  double det = g11 * g22 - g12 * g12;
  double c1 = (g22 * r1 - g12 * r2) / det, c2 = (g11 * r2 - g12 * r1) / det;
  Cubic<double> model = c1 * b1 + c2 * b2;
  double res = bombieri_norm_sq(f - model);
  if (best_w)
    for (int i = 0; i < 3; ++i) (*best_w)[i] = c1 * v1[i] + c2 * v2[i];
  return res;
}

}  // namespace detail

/// Multistart detection of the theorem's degenerate form. The input is
/// normalized internally; a fit is returned only when the squared Bombieri
/// residual of the normalized cubic falls below tol.
inline std::optional<SpecialForm> detect_special_form(Cubic<double> f, double tol = 1e-9) {
  if (f.is_zero()) throw std::invalid_argument("detect_special_form: zero cubic");
  double fnorm = std::sqrt(bombieri_norm_sq(f));
  f *= 1.0 / fnorm;

  double best_res = 1e300;
  std::array<double, 3> best_a{0, 0, 1};
  // 64 quasi-uniform axis starts (the w half-sphere of Shoemake quaternions
  // doubles as a low-discrepancy sphere sampler via the vector part).
  auto starts = quasi_uniform_quaternions(64, 7);
  for (auto& q : starts) {
    std::array<double, 3> a{q.x, q.y, q.z};
    double n = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    if (n < 1e-6) continue;
    for (auto& c : a) c /= n;
    // Local refinement: damped coordinate descent on the sphere with
    // central-difference gradients in the tangent plane.
    double res = detail::special_axis_residual(f, a);
    double step = 0.3;
    for (int it = 0; it < 120 && step > 1e-10; ++it) {
      bool improved = false;
      for (int dir = 0; dir < 4; ++dir) {
        std::array<double, 3> t = std::abs(a[0]) < 0.9
                                      ? std::array<double, 3>{1, 0, 0}
                                      : std::array<double, 3>{0, 1, 0};
        std::array<double, 3> e1{a[1] * t[2] - a[2] * t[1], a[2] * t[0] - a[0] * t[2],
                                 a[0] * t[1] - a[1] * t[0]};
        double n1 = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
        for (auto& c : e1) c /= n1;
        std::array<double, 3> e2{a[1] * e1[2] - a[2] * e1[1], a[2] * e1[0] - a[0] * e1[2],
                                 a[0] * e1[1] - a[1] * e1[0]};
        const std::array<double, 3>& d = dir < 2 ? e1 : e2;
        double sgn = (dir % 2 == 0) ? 1 : -1;
        std::array<double, 3> cand{a[0] + sgn * step * d[0], a[1] + sgn * step * d[1],
                                   a[2] + sgn * step * d[2]};
        double cn = std::sqrt(cand[0] * cand[0] + cand[1] * cand[1] + cand[2] * cand[2]);
        for (auto& c : cand) c /= cn;
        double cres = detail::special_axis_residual(f, cand);
        if (cres < res) {
          a = cand;
          res = cres;
          improved = true;
        }
      }
      if (!improved) step *= 0.5;
    }
    if (res < best_res) {
      best_res = res;
      best_a = a;
    }
  }

  if (best_res >= tol) return std::nullopt;
  std::array<double, 3> w;
  detail::special_axis_residual(f, best_a, &w);
  SpecialForm sf;
  sf.a = best_a;
  double wn = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
  sf.u = {w[0] / wn, w[1] / wn, w[2] / wn};
  sf.scale = wn * fnorm;
  sf.residual = best_res;
  return sf;
}

enum class PredictedCount { kZero, kOne, kTwo, kFamily };

inline std::string to_string(PredictedCount p) {
  switch (p) {
    case PredictedCount::kZero: return "0";
    case PredictedCount::kOne: return "1";
    case PredictedCount::kTwo: return "2";
    case PredictedCount::kFamily: return "family";
  }
  return "?";
}

struct ClassificationReport {
  JReportD j;
  bool exact_sign_available = false;
  int exact_sign = 0;
  PredictedCount predicted = PredictedCount::kZero;
  std::optional<SpecialForm> special_form;
  SearchOutcome search;
  std::size_t found_count = 0;
  bool found_family = false;
  bool consistent = false;
  std::vector<std::string> flags;
};

/// Thresholds of the float path: below kZeroBand the invariant is treated
/// as zero; inside [kZeroBand, kNearBand) the report carries a
/// near-degenerate flag.
inline constexpr double kZeroBand = 1e-10;
inline constexpr double kNearBand = 1e-6;

inline ClassificationReport classify(const Cubic<double>& f,
                                     const SearchConfig& cfg = {},
                                     std::optional<int> exact_sign = std::nullopt) {
  if (f.is_zero()) throw std::invalid_argument("classify: zero cubic");
  ClassificationReport rep;
  rep.j = j_invariant_d(f);
  if (exact_sign) {
    rep.exact_sign_available = true;
    rep.exact_sign = *exact_sign;
  }

  bool treat_zero = exact_sign ? *exact_sign == 0 : std::abs(rep.j.normalized_J) < kZeroBand;
  int sign = exact_sign ? *exact_sign : rep.j.sign;
  if (!exact_sign && std::abs(rep.j.normalized_J) >= kZeroBand &&
      std::abs(rep.j.normalized_J) < kNearBand)
    rep.flags.push_back("near-degenerate");

  if (treat_zero) {
    rep.special_form = detect_special_form(f);
    rep.predicted = rep.special_form ? PredictedCount::kFamily : PredictedCount::kOne;
  } else {
    rep.predicted = sign > 0 ? PredictedCount::kTwo : PredictedCount::kZero;
  }

  rep.search = find_icosahedra(f, cfg);
  rep.found_count = rep.search.icosahedra.size();
  rep.found_family = rep.search.family.has_value();

  switch (rep.predicted) {
    case PredictedCount::kZero: rep.consistent = !rep.found_family && rep.found_count == 0; break;
    case PredictedCount::kOne: rep.consistent = !rep.found_family && rep.found_count == 1; break;
    case PredictedCount::kTwo: rep.consistent = !rep.found_family && rep.found_count == 2; break;
    case PredictedCount::kFamily: rep.consistent = rep.found_family; break;
  }
  if (!rep.consistent) rep.flags.push_back("count-mismatch");
  return rep;
}

/// Exact-input convenience: exact J sign feeds the prediction, the float
/// search certifies it.
template <typename S>
ClassificationReport classify_exact(const Cubic<S>& f, const SearchConfig& cfg = {}) {
  auto jr = j_invariant(f);
  return classify(f.template cast<double>(), cfg, jr.sign);
}

}  // namespace icosa
