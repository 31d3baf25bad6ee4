#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "icosa/cubic.hpp"
#include "icosa/linalg.hpp"
#include "icosa/poly.hpp"

namespace icosa {

/// Subspace of the 10-dimensional cubic space, given by an exactly
/// independent basis of cubics (in practice inside the harmonic space H).
template <typename S>
struct Subspace {
  std::vector<Cubic<S>> basis;

  std::size_t dim() const { return basis.size(); }
};

template <typename S>
Subspace<S> make_subspace(std::vector<Cubic<S>> basis) {
  std::vector<std::vector<S>> rows;
  for (auto& c : basis) rows.emplace_back(c.coeffs.begin(), c.coeffs.end());
  if (span_rank(rows) != basis.size())
    throw std::invalid_argument("make_subspace: basis is dependent");
  return Subspace<S>{std::move(basis)};
}

/// Matrix of the skew form omega_u(p, q) = (u.p, q) on a subspace basis.
template <typename S>
struct SkewFormMatrix {
  Vec3<S> u;
  Matrix<S> entries;
};

template <typename S>
SkewFormMatrix<S> omega_matrix(const Vec3<S>& u, const Subspace<S>& sub) {
  std::size_t n = sub.dim();
  SkewFormMatrix<S> out{u, Matrix<S>(n, n)};
  std::vector<Cubic<S>> acted;
  for (auto& b : sub.basis) acted.push_back(lie_action(u, b));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out.entries(a, b) = bombieri_inner(acted[a], sub.basis[b]);
  return out;
}

namespace detail {

/// Pfaffian by expansion along the first remaining index; valid over any
/// commutative ring. `idx` holds the active row/column labels.
template <typename T>
T pfaffian_rec(const std::vector<std::vector<T>>& a, std::vector<int> idx) {
  if (idx.empty()) return T(1);
  T total(0);
  int first = idx[0];
  for (std::size_t p = 1; p < idx.size(); ++p) {
    std::vector<int> rest;
    for (std::size_t q = 1; q < idx.size(); ++q)
      if (q != p) rest.push_back(idx[q]);
    T term = a[first][idx[p]] * pfaffian_rec(a, rest);
    if (p % 2 == 0) term = -term;
    total += term;
  }
  return total;
}

}  // namespace detail

/// Combinatorial Pfaffian: sum over perfect matchings with the crossing
/// sign, pairs ordered increasingly. Throws for odd dimension; the
/// skew-symmetry of the input is the caller's responsibility.
template <typename T>
T pfaffian(const std::vector<std::vector<T>>& a) {
  std::size_t n = a.size();
  for (auto& row : a)
    if (row.size() != n) throw std::invalid_argument("pfaffian: not square");
  if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
  if (n == 0) return T(1);
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
  return detail::pfaffian_rec(a, idx);
}

template <typename S>
S pfaffian(const Matrix<S>& m) {
  std::vector<std::vector<S>> a(m.rows(), std::vector<S>(m.cols(), S(0)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return pfaffian(a);
}

/// Exact basis of W = p-perp inside the 7-dimensional harmonic space,
/// orthogonal complement under the Bombieri product.
template <typename S>
Subspace<S> perp_in_h(const Cubic<S>& p) {
  if (p.is_zero()) throw std::invalid_argument("perp_in_h: zero cubic");
  if (!is_harmonic(p)) throw std::invalid_argument("perp_in_h: cubic not harmonic");
  auto h = standard_h_basis<S>();
  Matrix<S> constraint(1, 7);
  for (int i = 0; i < 7; ++i) constraint(0, i) = bombieri_inner(p, h.elements[i]);
  auto null_basis = constraint.nullspace();
  if (null_basis.size() != 6) throw std::logic_error("perp_in_h: dimension != 6");
  std::vector<Cubic<S>> basis;
  for (auto& v : null_basis) {
    Cubic<S> c;
    for (int i = 0; i < 7; ++i) c += v[i] * h.elements[i];
    basis.push_back(c);
  }
  return make_subspace(std::move(basis));
}

/// Pf(omega_u restricted to W = p-perp) expanded symbolically as a cubic
/// in u. The result is a nonzero exact multiple of p for every harmonic
/// p defining a nonsingular plane curve.
template <typename S>
Cubic<S> pfaffian_cubic(const Cubic<S>& p) {
  Subspace<S> w = perp_in_h(p);
  // Entries are linear forms in u: assemble them from the coordinate
  // directions and expand the Pfaffian over the polynomial ring in u.
  std::array<Matrix<S>, 3> coord;
  for (int k = 0; k < 3; ++k) {
    Vec3<S> e{S(0), S(0), S(0)};
    e[k] = S(1);
    coord[k] = omega_matrix(e, w).entries;
  }
  std::vector<std::vector<Poly<S>>> a(6, std::vector<Poly<S>>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 3; ++k)
        a[i][j] += coord[k](i, j) * Poly<S>::variable(k);
  Poly<S> pf = pfaffian(a);
  if (pf.is_zero()) throw std::logic_error("pfaffian_cubic: identically zero");
  return Cubic<S>::from_poly(pf);
}

/// Exact proportionality of nonzero cubics by cross multiplication.
template <typename S>
bool cubics_proportional(const Cubic<S>& p, const Cubic<S>& q) {
  if (p.is_zero() || q.is_zero()) return false;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      if (!(p.coeffs[i] * q.coeffs[j] == p.coeffs[j] * q.coeffs[i])) return false;
  return true;
}

/// Result of testing a 3-dimensional subspace for simultaneous isotropy
/// under all omega_u. Linearity in u makes the three coordinate
/// directions sufficient.
template <typename S>
struct IsotropyResult {
  bool isotropic = false;
  // Offending (direction k, row a, column b, value) when not isotropic.
  std::optional<std::tuple<int, int, int, S>> witness;
};

template <typename S>
IsotropyResult<S> isotropic_check(const Subspace<S>& x) {
  if (x.dim() != 3) throw std::invalid_argument("isotropic_check: dim != 3");
  for (int k = 0; k < 3; ++k) {
    Vec3<S> e{S(0), S(0), S(0)};
    e[k] = S(1);
    Matrix<S> m = omega_matrix(e, x).entries;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (!(m(a, b) == S(0)))
          return {false, std::tuple<int, int, int, S>{k, a, b, m(a, b)}};
  }
  return {true, std::nullopt};
}

}  // namespace icosa
