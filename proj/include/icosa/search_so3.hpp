#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "icosa/cubic.hpp"
#include "icosa/icosa_geometry.hpp"

namespace icosa {

/// Unit quaternion acting as v -> q v q^{-1} (right-handed).
struct Quat {
  double w = 1, x = 0, y = 0, z = 0;

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
  void normalize() {
    double n = norm();
    w /= n;
    x /= n;
    y /= n;
    z /= n;
  }
  friend Quat operator*(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
};

inline Mat3d quat_to_matrix(const Quat& q) {
  double w = q.w, x = q.x, y = q.y, z = q.z;
  return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
           {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
           {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

/// exp of the world-frame angular increment xi applied on the left.
inline Quat quat_step(const std::array<double, 3>& xi, const Quat& q) {
  double theta = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
  Quat d{1, 0, 0, 0};
  if (theta > 0) {
    double h = theta / 2;
    double s = std::sin(h) / theta;
    d = {std::cos(h), s * xi[0], s * xi[1], s * xi[2]};
  }
  Quat out = d * q;
  out.normalize();
  return out;
}

/// Low-discrepancy quaternions on S^3 (Halton base 2/3/5 through the
/// Shoemake map), with the seed acting as a sequence offset.
inline std::vector<Quat> quasi_uniform_quaternions(int count, std::uint64_t seed) {
  auto halton = [](std::uint64_t i, int base) {
    double f = 1, r = 0;
    while (i > 0) {
      f /= base;
      r += f * static_cast<double>(i % base);
      i /= base;
    }
    return r;
  };
  std::vector<Quat> out;
  constexpr double tau = 2 * M_PI;
  for (int k = 0; k < count; ++k) {
    std::uint64_t i = seed + 1 + static_cast<std::uint64_t>(k);
    double u1 = halton(i, 2), u2 = halton(i, 3), u3 = halton(i, 5);
    double s1 = std::sqrt(1 - u1), s2 = std::sqrt(u1);
    Quat q{s1 * std::sin(tau * u2), s1 * std::cos(tau * u2), s2 * std::sin(tau * u3),
           s2 * std::cos(tau * u3)};
    q.normalize();
    out.push_back(q);
  }
  return out;
}

/// Unit axis representatives of the standard icosahedron.
inline const std::array<std::array<double, 3>, 6>& unit_axes() {
  static const std::array<std::array<double, 3>, 6> axes = [] {
    std::array<std::array<double, 3>, 6> a{};
    auto ico = standard_icosahedron();
    for (int i = 0; i < 6; ++i) {
      double n = 0;
      std::array<double, 3> v;
      for (int j = 0; j < 3; ++j) {
        v[j] = ico.axes[i][j].to_double();
        n += v[j] * v[j];
      }
      n = std::sqrt(n);
      for (int j = 0; j < 3; ++j) a[i][j] = v[j] / n;
    }
    return a;
  }();
  return axes;
}

struct SearchConfig {
  int starts = 512;
  double lm_tol = 1e-14;
  double accept_tol = 1e-9;
  double dedup_tol = 1e-6;
  std::uint64_t seed = 0;
  int max_iterations = 200;
};

struct FoundIcosahedron {
  Quat rotation;
  std::array<std::array<double, 3>, 6> axes;  // unit vectors, sign-ambiguous
  double max_residual = 0;                    // extended-precision re-check
};

struct IcosahedronFamily {
  std::array<double, 3> common_axis;  // shared vertex direction (up to sign)
  std::vector<FoundIcosahedron> samples;
};

struct SearchOutcome {
  std::vector<FoundIcosahedron> icosahedra;
  std::optional<IcosahedronFamily> family;
  int starts_used = 0;
  int converged_count = 0;
};

namespace detail {

inline std::array<double, 3> apply(const Mat3d& r, const std::array<double, 3>& v) {
  std::array<double, 3> w{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) w[i] += r[i][j] * v[j];
  return w;
}

inline std::array<double, 3> grad_cubic(const Cubic<double>& f,
                                        const std::array<double, 3>& p) {
  std::array<double, 3> g{};
  for (int m = 0; m < 10; ++m) {
    auto e = kCubicMonomials[m];
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      double t = f.coeffs[m] * e[v];
      for (int w = 0; w < 3; ++w) {
        int pow = e[w] - (w == v ? 1 : 0);
        for (int k = 0; k < pow; ++k) t *= p[w];
      }
      g[v] += t;
    }
  }
  return g;
}

/// Solves the 3x3 system a x = b by Cramer's rule.
inline std::array<double, 3> solve3(const std::array<std::array<double, 3>, 3>& a,
                                    const std::array<double, 3>& b) {
  auto det3 = [](const std::array<std::array<double, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  double d = det3(a);
  std::array<double, 3> x{};
  for (int c = 0; c < 3; ++c) {
    auto m = a;
    for (int r = 0; r < 3; ++r) m[r][c] = b[r];
    x[c] = det3(m) / d;
  }
  return x;
}

}  // namespace detail

/// Objective value sum_i f(R a_i)^2 and its analytic gradient with respect
/// to a world-frame angular perturbation of q. Also exposes the residual
/// vector and Jacobian for Levenberg-Marquardt.
struct ResidualEval {
  double value = 0;
  std::array<double, 3> gradient{};
  std::array<double, 6> r{};
  std::array<std::array<double, 3>, 6> jac{};  // d r_i / d xi_j
};

inline ResidualEval residual(const Cubic<double>& f, const Quat& q) {
  ResidualEval ev;
  Mat3d rot = quat_to_matrix(q);
  for (int i = 0; i < 6; ++i) {
    auto p = detail::apply(rot, unit_axes()[i]);
    ev.r[i] = f.evaluate(p);
    auto g = detail::grad_cubic(f, p);
    // d(R a_i)/d xi_j = e_j x (R a_i).
    for (int j = 0; j < 3; ++j) {
      int k = (j + 1) % 3, l = (j + 2) % 3;
      std::array<double, 3> ej_cross_p{};
      ej_cross_p[k] = -p[l];
      ej_cross_p[l] = p[k];
      ev.jac[i][j] = g[0] * ej_cross_p[0] + g[1] * ej_cross_p[1] + g[2] * ej_cross_p[2];
    }
    ev.value += ev.r[i] * ev.r[i];
  }
  for (int j = 0; j < 3; ++j) {
    double s = 0;
    for (int i = 0; i < 6; ++i) s += 2 * ev.r[i] * ev.jac[i][j];
    ev.gradient[j] = s;
  }
  return ev;
}

namespace detail {

inline std::optional<Quat> lm_minimize(const Cubic<double>& f, Quat q,
                                       const SearchConfig& cfg) {
  double lambda = 1e-3;
  ResidualEval ev = residual(f, q);
  for (int it = 0; it < cfg.max_iterations; ++it) {
    // Normal equations (J^T J + lambda I) delta = -J^T r.
    std::array<std::array<double, 3>, 3> a{};
    std::array<double, 3> b{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 3; ++j) {
        b[j] -= ev.r[i] * ev.jac[i][j];
        for (int k = 0; k < 3; ++k) a[j][k] += ev.jac[i][j] * ev.jac[i][k];
      }
    for (int j = 0; j < 3; ++j) a[j][j] += lambda;
    auto delta = solve3(a, b);
    double step = std::sqrt(delta[0] * delta[0] + delta[1] * delta[1] + delta[2] * delta[2]);
    if (!std::isfinite(step)) return std::nullopt;
    Quat q_new = quat_step(delta, q);
    ResidualEval ev_new = residual(f, q_new);
    if (ev_new.value < ev.value) {
      q = q_new;
      ev = ev_new;
      lambda = std::max(lambda * 0.3, 1e-12);
      if (step < cfg.lm_tol || ev.value < 1e-30) break;
    } else {
      lambda *= 4;
      if (lambda > 1e12) break;
    }
  }
  return q;
}

/// Hausdorff-style distance between axis sets modulo sign.
inline double axis_set_distance(const std::array<std::array<double, 3>, 6>& a,
                                const std::array<std::array<double, 3>, 6>& b) {
  double worst = 0;
  for (auto& va : a) {
    double best = 1e300;
    for (auto& vb : b) {
      double dp = 0, dm = 0;
      for (int k = 0; k < 3; ++k) {
        dp += (va[k] - vb[k]) * (va[k] - vb[k]);
        dm += (va[k] + vb[k]) * (va[k] + vb[k]);
      }
      best = std::min(best, std::min(dp, dm));
    }
    worst = std::max(worst, best);
  }
  return std::sqrt(worst);
}

/// Extended-precision maximum nodal residual of the rotated axes.
inline double extended_residual(const Cubic<double>& f, const Quat& q) {
  long double w = q.w, x = q.x, y = q.y, z = q.z;
  long double rot[3][3] = {
      {1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
      {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
      {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
  long double worst = 0;
  for (auto& a : unit_axes()) {
    long double p[3] = {0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) p[i] += rot[i][j] * static_cast<long double>(a[j]);
    long double val = 0;
    for (int m = 0; m < 10; ++m) {
      long double t = f.coeffs[m];
      for (int v = 0; v < 3; ++v)
        for (int k = 0; k < kCubicMonomials[m][v]; ++k) t *= p[v];
      val += t;
    }
    worst = std::max(worst, std::abs(val));
  }
  return static_cast<double>(worst);
}

}  // namespace detail

/// Deduplicates solutions modulo the icosahedral group and quaternion sign
/// via the distance between their axis sets.
inline std::vector<FoundIcosahedron> dedup(std::vector<FoundIcosahedron> sols,
                                           double tol) {
  std::vector<FoundIcosahedron> reps;
  for (auto& s : sols) {
    bool fresh = true;
    for (auto& r : reps)
      if (detail::axis_set_distance(s.axes, r.axes) < tol) {
        fresh = false;
        if (s.max_residual < r.max_residual) r = s;
        break;
      }
    if (fresh) reps.push_back(s);
  }
  return reps;
}

/// Multistart Levenberg-Marquardt enumeration of all regular icosahedra
/// whose 12 vertices lie on the nodal set of f. More than two distinct
/// solutions triggers common-vertex family detection.
inline SearchOutcome find_icosahedra(Cubic<double> f, const SearchConfig& cfg = {}) {
  if (f.is_zero()) throw std::invalid_argument("find_icosahedra: zero cubic");
  // Scale-free objective: normalize to unit Bombieri norm.
  double norm = std::sqrt(bombieri_norm_sq(f));
  f *= 1.0 / norm;

  SearchOutcome out;
  std::vector<FoundIcosahedron> accepted;
  auto starts = quasi_uniform_quaternions(cfg.starts, cfg.seed);
  out.starts_used = cfg.starts;
  for (auto& q0 : starts) {
    auto q = detail::lm_minimize(f, q0, cfg);
    if (!q) continue;
    ResidualEval ev = residual(f, *q);
    double worst = 0;
    for (double r : ev.r) worst = std::max(worst, std::abs(r));
    if (worst >= cfg.accept_tol) continue;
    ++out.converged_count;
    FoundIcosahedron sol;
    sol.rotation = *q;
    Mat3d rot = quat_to_matrix(*q);
    for (int i = 0; i < 6; ++i) sol.axes[i] = detail::apply(rot, unit_axes()[i]);
    sol.max_residual = detail::extended_residual(f, *q);
    if (sol.max_residual < 1e-8) accepted.push_back(sol);
  }
  accepted = dedup(std::move(accepted), cfg.dedup_tol);

  if (accepted.size() > 2) {
    // A one-parameter family: all solutions share a vertex axis. Find the
    // axis of the first solution closest (mod sign) to an axis of every
    // other solution, then re-verify 8 angular samples spinning about it.
    std::optional<std::array<double, 3>> common;
    for (auto& cand : accepted[0].axes) {
      bool shared = true;
      for (std::size_t s = 1; s < accepted.size() && shared; ++s) {
        double best = 1e300;
        for (auto& other : accepted[s].axes) {
          double dp = 0, dm = 0;
          for (int k = 0; k < 3; ++k) {
            dp += (cand[k] - other[k]) * (cand[k] - other[k]);
            dm += (cand[k] + other[k]) * (cand[k] + other[k]);
          }
          best = std::min(best, std::min(dp, dm));
        }
        if (std::sqrt(best) > 1e-4) shared = false;
      }
      if (shared) {
        common = cand;
        break;
      }
    }
    if (common) {
      IcosahedronFamily fam;
      fam.common_axis = *common;
      bool all_good = true;
      for (int k = 0; k < 8; ++k) {
        double ang = 2 * M_PI * k / 8;
        std::array<double, 3> xi{(*common)[0] * ang, (*common)[1] * ang,
                                 (*common)[2] * ang};
        Quat qk = quat_step(xi, accepted[0].rotation);
        FoundIcosahedron sample;
        sample.rotation = qk;
        Mat3d rot = quat_to_matrix(qk);
        for (int i = 0; i < 6; ++i) sample.axes[i] = detail::apply(rot, unit_axes()[i]);
        sample.max_residual = detail::extended_residual(f, qk);
        if (sample.max_residual >= cfg.accept_tol) all_good = false;
        fam.samples.push_back(sample);
      }
      if (all_good) out.family = std::move(fam);
    }
  }
  out.icosahedra = std::move(accepted);
  return out;
}

}  // namespace icosa
