#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "icosa/cubic.hpp"
#include "icosa/golden.hpp"
#include "icosa/linalg.hpp"
#include "icosa/pi_scalar.hpp"
#include "icosa/sphere_integrals.hpp"

namespace icosa {

using GMat3 = std::array<std::array<Golden, 3>, 3>;

inline GMat3 gmat_identity() {
  GMat3 m{};
  for (int i = 0; i < 3; ++i) m[i][i] = Golden(1);
  return m;
}

inline GMat3 gmat_mul(const GMat3& x, const GMat3& y) {
  GMat3 p{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) p[i][j] += x[i][k] * y[k][j];
  return p;
}

inline GMat3 gmat_transpose(const GMat3& m) {
  GMat3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

inline Vec3<Golden> gmat_apply(const GMat3& m, const Vec3<Golden>& v) {
  Vec3<Golden> w{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) w[i] += m[i][j] * v[j];
  return w;
}

inline Golden gmat_det(const GMat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline bool gmat_is_rotation(const GMat3& m) {
  GMat3 mtm = gmat_mul(gmat_transpose(m), m);
  if (mtm != gmat_identity()) return false;
  return gmat_det(m) == Golden(1);
}

/// Pullback of a cubic by a rotation: (R . p)(x) = p(R^T x).
template <typename S>
Cubic<S> rotate_cubic(const GMat3& r, const Cubic<S>& p) {
  std::array<std::array<S, 3>, 3> sub;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sub[i][j] = scalar_cast<S, Golden>(r[j][i]);
  return p.compose_linear(sub);
}

/// Six axis representatives of a regular icosahedron; each a_i stands for
/// the vertex pair {a_i, -a_i}.
struct Icosahedron {
  std::array<Vec3<Golden>, 6> axes;

  std::vector<Vec3<Golden>> vertices() const {
    std::vector<Vec3<Golden>> v;
    for (auto& a : axes) {
      v.push_back(a);
      v.push_back({-a[0], -a[1], -a[2]});
    }
    return v;
  }
};

/// Standard model with vertices (0,±phi,±1), (±1,0,±phi), (±phi,±1,0).
inline Icosahedron standard_icosahedron() {
  Golden phi = Golden::phi(), one(1), zero(0);
  Icosahedron ico;
  ico.axes = {{{zero, phi, one},
               {zero, phi, -one},
               {one, zero, phi},
               {-one, zero, phi},
               {phi, one, zero},
               {phi, -one, zero}}};
  return ico;
}

/// Rotation by pi exchanging two adjacent face cubics (printed in the
/// source material this build follows; exact, order 2).
inline GMat3 appendix_g() {
  Golden phi = Golden::phi();
  auto e = [&](Golden v) { return Golden(Rational(1, 2)) * v; };
  GMat3 g = {{{e(-phi), e(phi - Golden(1)), e(Golden(-1))},
        {e(phi - Golden(1)), e(Golden(-1)), e(-phi)},
        {e(Golden(-1)), e(-phi), e(phi - Golden(1))}}};
  return g;
}

/// Cyclic coordinate rotation (x1,x2,x3) -> (x2,x3,x1); order 3.
inline GMat3 cyclic_rotation() {
  GMat3 c{};
  c[0][1] = Golden(1);
  c[1][2] = Golden(1);
  c[2][0] = Golden(1);
  return c;
}

/// Rotation by 2*pi/5 about the vertex axis (0, phi, 1); order 5. The
/// cyclic rotation and the order-2 matrix above generate only the
/// 6-element stabilizer of a face axis, so a third generator is needed to
/// reach the full group.
inline GMat3 order5_rotation() {
  auto G = [](int a, int b) { return Golden(Rational(a, 4), Rational(b, 4)); };
  GMat3 r = {{{G(-1, 1), G(-2, 0), G(1, 1)},
              {G(2, 0), G(1, 1), G(-1, 1)},
              {G(-1, -1), G(-1, 1), G(2, 0)}}};
  return r;
}

/// The 60 rotations of the icosahedron, with the permutation they induce
/// on the five coordinate-plane-triple cubics q_alpha.
struct RotationGroup {
  std::vector<GMat3> elements;              // elements[0] = identity
  std::vector<std::array<int, 5>> q_perm;   // filled by q_basis
  std::vector<int> element_order;

  int size() const { return static_cast<int>(elements.size()); }
};

inline int rotation_order(const GMat3& m) {
  GMat3 p = m;
  GMat3 id = gmat_identity();
  for (int o = 1; o <= 6; ++o) {
    if (p == id) return o;
    p = gmat_mul(p, m);
  }
  throw std::logic_error("rotation_order: order > 6");
}

inline RotationGroup build_group() {
  std::vector<GMat3> gens = {cyclic_rotation(), appendix_g(), order5_rotation()};
  for (auto& g : gens)
    if (!gmat_is_rotation(g)) throw std::logic_error("build_group: generator not a rotation");

  RotationGroup grp;
  grp.elements.push_back(gmat_identity());
  std::size_t frontier = 0;
  while (frontier < grp.elements.size()) {
    GMat3 base = grp.elements[frontier++];
    for (auto& g : gens) {
      GMat3 prod = gmat_mul(g, base);
      if (std::find(grp.elements.begin(), grp.elements.end(), prod) == grp.elements.end())
        grp.elements.push_back(prod);
    }
    if (grp.elements.size() > 60) break;
  }
  if (grp.elements.size() != 60)
    throw std::logic_error("build_group: closure has " +
                           std::to_string(grp.elements.size()) + " elements, expected 60");
  for (auto& m : grp.elements) grp.element_order.push_back(rotation_order(m));
  return grp;
}

/// The five cubics forming the orbit of x1x2x3 under the group; q[0] is
/// x1x2x3 itself. Also fills the permutation table of the group.
struct IcosahedralCubics {
  std::array<Cubic<Golden>, 5> q;
};

inline IcosahedralCubics q_basis(RotationGroup& group) {
  std::vector<Cubic<Golden>> orbit;
  Cubic<Golden> seed = Cubic<Golden>::xyz();
  std::vector<Cubic<Golden>> images;
  for (auto& m : group.elements) {
    Cubic<Golden> img = rotate_cubic(m, seed);
    images.push_back(img);
    if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(img);
  }
  if (orbit.size() != 5)
    throw std::logic_error("q_basis: orbit size " + std::to_string(orbit.size()));

  IcosahedralCubics qs;
  for (int i = 0; i < 5; ++i) qs.q[i] = orbit[i];

  Cubic<Golden> sum;
  Poly<Golden> sum_cubes;
  for (auto& q : qs.q) {
    sum += q;
    Poly<Golden> p = q.to_poly();
    sum_cubes += p * p * p;
  }
  if (!sum.is_zero()) throw std::logic_error("q_basis: sum of q_alpha nonzero");
  if (!sum_cubes.is_zero()) throw std::logic_error("q_basis: sum of cubes nonzero");

  group.q_perm.clear();
  for (auto& m : group.elements) {
    std::array<int, 5> perm{};
    for (int a = 0; a < 5; ++a) {
      Cubic<Golden> img = rotate_cubic(m, qs.q[a]);
      auto it = std::find(orbit.begin(), orbit.end(), img);
      if (it == orbit.end()) throw std::logic_error("q_basis: orbit not closed");
      perm[a] = static_cast<int>(it - orbit.begin());
    }
    group.q_perm.push_back(perm);
  }
  return qs;
}

/// Exact basis of the cubics vanishing on all six axes of an icosahedron.
/// Dimension 4; every element is automatically harmonic.
inline std::vector<Cubic<Golden>> vanishing_space(const Icosahedron& ico) {
  Matrix<Golden> eval(6, 10);
  for (int r = 0; r < 6; ++r)
    for (int m = 0; m < 10; ++m) {
      Golden t(1);
      for (int v = 0; v < 3; ++v)
        for (int k = 0; k < kCubicMonomials[m][v]; ++k) t *= ico.axes[r][v];
      eval(r, m) = t;
    }
  auto null_basis = eval.nullspace();
  if (null_basis.size() != 4)
    throw std::logic_error("vanishing_space: dimension " + std::to_string(null_basis.size()));
  std::vector<Cubic<Golden>> out;
  for (auto& v : null_basis) {
    Cubic<Golden> c;
    std::copy(v.begin(), v.end(), c.coeffs.begin());
    if (!is_harmonic(c)) throw std::logic_error("vanishing_space: non-harmonic element");
    out.push_back(c);
  }
  return out;
}

/// Coordinates y with f = sum y_alpha q_alpha, sum y_alpha = 0, plus the
/// elementary symmetric values sigma_2, sigma_3, sigma_4.
struct SigmaCoords {
  std::array<Golden, 5> y;
  Golden sigma2, sigma3, sigma4;
};

inline std::array<Golden, 3> elementary_symmetric_234(const std::array<Golden, 5>& y) {
  Golden e2(0), e3(0), e4(0);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      e2 += y[i] * y[j];
      for (int k = j + 1; k < 5; ++k) {
        e3 += y[i] * y[j] * y[k];
        for (int l = k + 1; l < 5; ++l) e4 += y[i] * y[j] * y[k] * y[l];
      }
    }
  return {e2, e3, e4};
}

/// Solves f = sum y_alpha q_alpha with sum y = 0 exactly. Throws if f is
/// outside the span of the q_alpha.
inline SigmaCoords sigma_coords(const Cubic<Golden>& f, const IcosahedralCubics& qs) {
  Matrix<Golden> a(11, 5);
  std::vector<Golden> b(11, Golden(0));
  for (int row = 0; row < 10; ++row) {
    for (int col = 0; col < 5; ++col) a(row, col) = qs.q[col].coeffs[row];
    b[row] = f.coeffs[row];
  }
  for (int col = 0; col < 5; ++col) a(10, col) = Golden(1);
  auto sol = a.solve(b);
  if (!sol) throw std::invalid_argument("sigma_coords: cubic outside span of q_alpha");
  SigmaCoords sc;
  std::copy(sol->begin(), sol->end(), sc.y.begin());
  // Exact residual check (solve() guarantees it, but the reconstruction is
  // the contract).
  Cubic<Golden> recon;
  for (int i = 0; i < 5; ++i) recon += sc.y[i] * qs.q[i];
  if (!(recon == f)) throw std::logic_error("sigma_coords: reconstruction failed");
  auto e = elementary_symmetric_234(sc.y);
  sc.sigma2 = e[0];
  sc.sigma3 = e[1];
  sc.sigma4 = e[2];
  return sc;
}

/// rho(u) = sum q_alpha(u) q_alpha; its sigma coordinates lie on the
/// Clebsch surface for every u, and rho(u) = 0 exactly when u is an axis.
inline Cubic<Golden> clebsch_rho(const Vec3<Golden>& u, const IcosahedralCubics& qs) {
  Cubic<Golden> out;
  for (auto& q : qs.q) out += q.evaluate(u) * q;
  return out;
}

/// Face axis for a pair {alpha, beta}: common rotation axis of the
/// order-3 elements stabilizing both cubics. Stored unnormalized with its
/// exact squared length; the sign convention makes the first nonzero
/// coordinate positive.
struct FaceAxis {
  Vec3<Golden> v;
  Golden norm2;
};

using FaceAxes = std::map<std::pair<int, int>, FaceAxis>;

inline FaceAxes face_axes(const RotationGroup& group) {
  if (group.q_perm.empty())
    throw std::invalid_argument("face_axes: group lacks permutation table (run q_basis)");
  FaceAxes out;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      for (int e = 0; e < group.size(); ++e) {
        if (group.element_order[e] != 3) continue;
        const auto& p = group.q_perm[e];
        if (p[a] != a || p[b] != b) continue;
        // Axis = kernel of (R - I).
        Matrix<Golden> m(3, 3);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            m(i, j) = group.elements[e][i][j] - (i == j ? Golden(1) : Golden(0));
        auto null_basis = m.nullspace();
        if (null_basis.size() != 1)
          throw std::logic_error("face_axes: rotation axis not one-dimensional");
        Vec3<Golden> v{null_basis[0][0], null_basis[0][1], null_basis[0][2]};
        for (auto& comp : v) {
          if (comp.is_zero()) continue;
          if (comp.sgn() < 0) v = {-v[0], -v[1], -v[2]};
          break;
        }
        out[{a, b}] = FaceAxis{v, dot(v, v)};
        break;
      }
      if (!out.count({a, b})) throw std::logic_error("face_axes: missing pair");
    }
  return out;
}

/// M_app(y) = sum_{alpha != beta} y_a y_b vhat vhat^T over ordered pairs;
/// exact because vhat vhat^T = v v^T / |v|^2 stays in the field.
inline Matrix<Golden> appendix_m(const std::array<Golden, 5>& y, const FaceAxes& axes) {
  Matrix<Golden> m(3, 3);
  for (auto& [pair, fa] : axes) {
    Golden w = Golden(2) * y[pair.first] * y[pair.second] / fa.norm2;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) += w * fa.v[i] * fa.v[j];
  }
  return m;
}

inline Golden trace(const Matrix<Golden>& m) {
  Golden t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Exact multivariate fit report for one trace formula: coefficients of
/// the requested sigma-monomial basis, produced by exact elimination over
/// sample points, plus agreement with the printed reference coefficients.
struct TraceFit {
  std::vector<Golden> coeffs;
  std::vector<Golden> printed;
  bool matches_printed = false;
  bool fit_consistent = false;
};

struct AppendixReport {
  PiRational lambda;  // (1/3) integral of q1^2
  PiGolden mu, nu;    // pair-integral decomposition
  bool mu_nu_exact = false;
  bool inner_products_ok = false;      // {5/9 x15, 1/9 x30}
  Golden triple_product;               // (v^{12}, g v^{12})^3, expect -1/27
  bool anchor_ok = false;              // M_app(y(q1)) = -(4/15) I
  bool normalized_s_ok = false;        // S = -8 sigma2 I - 3 M_app, tr S = -30 sigma2
  TraceFit tr_m;                       // basis {sigma2}
  TraceFit tr_m2;                      // basis {sigma2^2, sigma4}
  TraceFit tr_m3;                      // basis {sigma2^3, sigma2*sigma4, sigma3^2}
  TraceFit identity;                   // 3 tau3 - 4 tau1 tau2, same basis
};

namespace detail {

inline TraceFit exact_fit(const std::vector<std::vector<Golden>>& rows,
                          const std::vector<Golden>& rhs,
                          std::vector<Golden> printed) {
  TraceFit fit;
  fit.printed = std::move(printed);
  Matrix<Golden> a(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) a(i, j) = rows[i][j];
  if (a.rank() != rows[0].size()) return fit;  // degenerate sample set
  auto sol = a.solve(rhs);
  if (!sol) return fit;
  fit.fit_consistent = true;
  fit.coeffs = *sol;
  fit.matches_printed = (fit.coeffs == fit.printed);
  return fit;
}

inline std::vector<std::array<Golden, 5>> fit_samples() {
  // Deterministic rational y samples with sigma1 = 0, generic enough to
  // make all fit systems full rank.
  std::vector<std::array<int, 4>> raw = {
      {1, 2, 3, 4},  {1, -2, 3, 5},  {2, 1, -1, 7},  {5, -3, 2, 1},
      {1, 1, 2, 9},  {3, -5, 7, -2}, {4, 4, -3, 1},  {2, -7, 1, 3},
      {6, 1, -4, 2}, {1, 8, -2, -3}};
  std::vector<std::array<Golden, 5>> out;
  for (auto& r : raw) {
    std::array<Golden, 5> y;
    Golden sum(0);
    for (int i = 0; i < 4; ++i) {
      y[i] = Golden(r[i]);
      sum += y[i];
    }
    y[4] = -sum;
    out.push_back(y);
  }
  return out;
}

}  // namespace detail

/// Runs the whole verification suite of the invariants appendix: lambda,
/// mu, nu from exact integrals, face-axis tables, the M_app anchor, the
/// normalized-S relation, and the exact fits of the trace formulas.
/// Printed coefficients are compared against, never assumed.
inline AppendixReport appendix_verify(const RotationGroup& group,
                                      const IcosahedralCubics& qs, const FaceAxes& axes) {
  AppendixReport rep;

  // lambda = (1/3) integral q1^2.
  Poly<Golden> q0 = qs.q[0].to_poly();
  PiGolden int_q0_sq = integrate_poly(q0 * q0);
  if (!int_q0_sq.coeff().is_rational()) throw std::logic_error("lambda not rational");
  rep.lambda = PiRational(int_q0_sq.coeff().a() / 3, 1);

  // mu, nu from T_ij = integral q1 q2 x_i x_j = mu I + nu vhat vhat^T.
  {
    const FaceAxis& fa = axes.at({0, 1});
    Poly<Golden> q0q1 = qs.q[0].to_poly() * qs.q[1].to_poly();
    Matrix<Golden> t(3, 3);
    int pi_pow = -1;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        PiGolden val = integrate_poly(q0q1 * Poly<Golden>::variable(i) * Poly<Golden>::variable(j));
        t(i, j) = t(j, i) = val.coeff();
        if (!val.is_zero()) pi_pow = val.pi_power();
      }
    // Project: trace gives 3 mu + nu, the v-component gives mu + nu.
    Golden tr = trace(t);
    Golden vTv(0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) vTv += fa.v[i] * t(i, j) * fa.v[j];
    vTv /= fa.norm2;
    Golden nu_c = (Golden(3) * vTv - tr) / Golden(2);
    Golden mu_c = (tr - nu_c) / Golden(3);
    rep.mu = PiGolden(mu_c, pi_pow < 0 ? 1 : pi_pow);
    rep.nu = PiGolden(nu_c, pi_pow < 0 ? 1 : pi_pow);
    // Exact decomposition check over the full matrix.
    rep.mu_nu_exact = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Golden model = (i == j ? mu_c : Golden(0)) + nu_c * fa.v[i] * fa.v[j] / fa.norm2;
        if (!(model == t(i, j))) rep.mu_nu_exact = false;
      }
  }

  // Face-axis inner-product statistics: 5/9 on 15 index-disjoint pairs,
  // 1/9 on 30 index-sharing pairs.
  {
    int disjoint = 0, sharing = 0;
    bool ok = true;
    std::vector<std::pair<std::pair<int, int>, FaceAxis>> list(axes.begin(), axes.end());
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        Golden ip = dot(list[i].second.v, list[j].second.v);
        Golden ratio = ip * ip / (list[i].second.norm2 * list[j].second.norm2);
        bool share = list[i].first.first == list[j].first.first ||
                     list[i].first.first == list[j].first.second ||
                     list[i].first.second == list[j].first.first ||
                     list[i].first.second == list[j].first.second;
        if (share) {
          ++sharing;
          if (!(ratio == Golden(Rational(1, 9)))) ok = false;
        } else {
          ++disjoint;
          if (!(ratio == Golden(Rational(5, 9)))) ok = false;
        }
      }
    rep.inner_products_ok = ok && disjoint == 15 && sharing == 30;
  }

  // Triple product (v^{12}, g v^{12})^3 for an order-3 g fixing q1.
  {
    const FaceAxis& v01 = axes.at({0, 1});
    rep.triple_product = Golden(0);
    for (int e = 0; e < group.size(); ++e) {
      if (group.element_order[e] != 3) continue;
      const auto& p = group.q_perm[e];
      if (p[0] != 0 || p[1] == 1) continue;  // fix q1, move q2
      Vec3<Golden> gv = gmat_apply(group.elements[e], v01.v);
      Golden ip = dot(v01.v, gv) / v01.norm2;
      rep.triple_product = ip * ip * ip;
      break;
    }
  }

  // Anchor: M_app at y(q1) = (4/5, -1/5, ...) equals -(4/15) I.
  {
    std::array<Golden, 5> y{Golden(Rational(4, 5)), Golden(Rational(-1, 5)),
                            Golden(Rational(-1, 5)), Golden(Rational(-1, 5)),
                            Golden(Rational(-1, 5))};
    Matrix<Golden> m = appendix_m(y, axes);
    Matrix<Golden> expect(3, 3);
    for (int i = 0; i < 3; ++i) expect(i, i) = Golden(Rational(-4, 15));
    rep.anchor_ok = (m == expect);
  }

  // Normalized-S relation on the fit samples: with lambda scaled to 4,
  // S = -8 sigma2 I - 3 M_app and tr S = -30 sigma2.
  auto samples = detail::fit_samples();
  {
    rep.normalized_s_ok = true;
    // scale 4 / lambda = 4 / ((4/315) pi): coefficient factor 315.
    Golden scale = Golden(Rational(4) / rep.lambda.coeff());
    for (int si = 0; si < 3; ++si) {  // three samples suffice for the exact check
      auto& y = samples[si];
      Cubic<Golden> f;
      for (int i = 0; i < 5; ++i) f += y[i] * qs.q[i];
      auto mp = moment_matrices(f);
      auto e = elementary_symmetric_234(y);
      Matrix<Golden> mapp = appendix_m(y, axes);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Golden s_norm = scale * mp.S_mat[i][j].coeff();
          Golden model = (i == j ? Golden(-8) * e[0] : Golden(0)) - Golden(3) * mapp(i, j);
          if (!(s_norm == model)) rep.normalized_s_ok = false;
        }
      Golden tr_s_norm = scale * mp.trace_S().coeff();
      if (!(tr_s_norm == Golden(-30) * e[0])) rep.normalized_s_ok = false;
    }
  }

  // Exact fits of the trace formulas in the sigma basis.
  {
    std::vector<std::vector<Golden>> rows1, rows2, rows3;
    std::vector<Golden> rhs1, rhs2, rhs3, rhs_id;
    for (auto& y : samples) {
      auto e = elementary_symmetric_234(y);
      Matrix<Golden> m = appendix_m(y, axes);
      Matrix<Golden> m2 = m * m;
      Matrix<Golden> m3 = m2 * m;
      Golden t1 = trace(m), t2 = trace(m2), t3 = trace(m3);
      rows1.push_back({e[0]});
      rows2.push_back({e[0] * e[0], e[2]});
      rows3.push_back({e[0] * e[0] * e[0], e[0] * e[2], e[1] * e[1]});
      rhs1.push_back(t1);
      rhs2.push_back(t2);
      rhs3.push_back(t3);
      // tau_i = elementary symmetric functions of the eigenvalues of M.
      Golden tau1 = t1;
      Golden tau2 = (t1 * t1 - t2) / Golden(2);
      Golden tau3 = m.determinant();
      rhs_id.push_back(Golden(3) * tau3 - Golden(4) * tau1 * tau2);
    }
    rep.tr_m = detail::exact_fit(rows1, rhs1, {Golden(2)});
    rep.tr_m2 = detail::exact_fit(rows2, rhs2, {Golden(4), Golden(Rational(160, 9))});
    rep.tr_m3 = detail::exact_fit(
        rows3, rhs3, {Golden(8), Golden(Rational(-160, 9)), Golden(16)});
    // Printed final identity: 3 tau3 - 4 tau1 tau2 = 16 sigma3^2.
    rep.identity =
        detail::exact_fit(rows3, rhs_id, {Golden(0), Golden(0), Golden(16)});
  }
  return rep;
}

/// The second icosahedron of the reducible family: line {x3 = 0} plus the
/// conic a(phi^4 x1^2 + x2^2 - phi^2 x3^2) + b x1 x2 = 0; the other
/// solution sits at rotation angle arctan(b / (a (1 - phi^4))) about x3,
/// in the orientation mapping (0, phi, 1) to (phi sin t, phi cos t, 1),
/// i.e. the matrix rows ((cos t, sin t, 0), (-sin t, cos t, 0), (0, 0, 1)).
inline double second_icosahedron_angle(double a, double b) {
  if (a == 0) throw std::invalid_argument("second_icosahedron_angle: a = 0 is the q case");
  double phi = (1 + std::sqrt(5.0)) / 2;
  double phi4 = phi * phi * phi * phi;
  return std::atan(b / (a * (1 - phi4)));
}

/// The cubic x3 * (a (phi^4 x1^2 + x2^2 - phi^2 x3^2) + b x1 x2). It
/// vanishes on all six standard axes, hence is harmonic and lies in V.
inline Cubic<Golden> conic_family_cubic(const Rational& a, const Rational& b) {
  Golden phi = Golden::phi();
  Golden phi2 = phi * phi;
  Golden phi4 = phi2 * phi2;
  Cubic<Golden> c;
  c.coeffs[2] = Golden(a) * phi4;    // x1^2 x3
  c.coeffs[7] = Golden(a);           // x2^2 x3
  c.coeffs[9] = -Golden(a) * phi2;   // x3^3
  c.coeffs[4] = Golden(b);           // x1 x2 x3
  return c;
}

}  // namespace icosa
