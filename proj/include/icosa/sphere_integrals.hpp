#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "icosa/cubic.hpp"
#include "icosa/pi_scalar.hpp"
#include "icosa/poly.hpp"

namespace icosa {

/// Exact integral of x1^i x2^j x3^k over the unit sphere:
/// zero when any exponent is odd, otherwise
/// 4 pi (i-1)!!(j-1)!!(k-1)!! / (i+j+k+1)!!.
inline PiRational integrate_monomial(int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0) throw std::invalid_argument("negative exponent");
  if (i % 2 || j % 2 || k % 2) return PiRational(0);
  auto dfact = [](int n) {
    BigInt r = 1;
    for (int m = n; m > 1; m -= 2) r *= m;
    return r;
  };
  Rational value(4 * dfact(i - 1) * dfact(j - 1) * dfact(k - 1), dfact(i + j + k + 1));
  return PiRational(value, 1);
}

/// c_n = 2^{n+2} pi n! / (2n+1)!, the universal constant of the pairing
/// formula for integrals of products of linear forms.
inline PiRational c_constant(int n) {
  if (n < 1) throw std::invalid_argument("c_constant: n >= 1 required");
  BigInt num = BigInt(1) << (n + 2);
  BigInt fact_n = 1, fact_2n1 = 1;
  for (int m = 2; m <= n; ++m) fact_n *= m;
  for (int m = 2; m <= 2 * n + 1; ++m) fact_2n1 *= m;
  return PiRational(Rational(num * fact_n, fact_2n1), 1);
}

namespace detail {
template <typename S>
void matching_sum(std::vector<int>& left, const std::vector<Vec3<S>>& v, const S& acc,
                  S& total) {
  if (left.empty()) {
    total += acc;
    return;
  }
  int first = left[0];
  for (std::size_t p = 1; p < left.size(); ++p) {
    int partner = left[p];
    std::vector<int> rest;
    for (std::size_t q = 1; q < left.size(); ++q)
      if (q != p) rest.push_back(left[q]);
    matching_sum(rest, v, acc * dot(v[first], v[partner]), total);
  }
}
}  // namespace detail

/// Integral over S^2 of (a_1,x)(a_2,x)...(a_{2n},x): c_n times the sum over
/// perfect matchings of products of pairwise inner products.
template <typename S>
PiScalar<S> linear_product_integral(const std::vector<Vec3<S>>& vectors) {
  if (vectors.size() % 2 != 0)
    throw std::invalid_argument("linear_product_integral: odd vector count");
  if (vectors.empty()) return PiScalar<S>(S(4), 1);  // area of the sphere
  int n = static_cast<int>(vectors.size() / 2);
  std::vector<int> idx(vectors.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  S total(0);
  detail::matching_sum(idx, vectors, S(1), total);
  PiRational cn = c_constant(n);
  return PiScalar<S>(scalar_cast<S, Rational>(cn.coeff()) * total, 1);
}

/// Term-wise exact integration of a polynomial integrand over S^2.
template <typename S>
PiScalar<S> integrate_poly(const Poly<S>& p) {
  PiScalar<S> total;
  for (auto& [e, c] : p.terms()) {
    PiRational m = integrate_monomial(e[0], e[1], e[2]);
    if (m.is_zero()) continue;
    total += PiScalar<S>(c * scalar_cast<S, Rational>(m.coeff()), 1);
  }
  return total;
}

template <typename S>
using PiMat3 = std::array<std::array<PiScalar<S>, 3>, 3>;

/// The moment matrices of a harmonic cubic:
/// S_ij = integral of f^2 x_i x_j, and M = S - (4/15) tr(S) I.
template <typename S>
struct MomentPair {
  PiMat3<S> S_mat;
  PiMat3<S> M_mat;

  PiScalar<S> trace_S() const { return S_mat[0][0] + S_mat[1][1] + S_mat[2][2]; }
  PiScalar<S> trace_M() const { return M_mat[0][0] + M_mat[1][1] + M_mat[2][2]; }
};

template <typename S>
MomentPair<S> moment_matrices(const Cubic<S>& f) {
  Poly<S> f2 = f.to_poly() * f.to_poly();
  MomentPair<S> mp;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Poly<S> integrand = f2 * Poly<S>::variable(i) * Poly<S>::variable(j);
      mp.S_mat[i][j] = mp.S_mat[j][i] = integrate_poly(integrand);
    }
  PiScalar<S> shift = frac<S>(4, 15) * mp.trace_S();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      mp.M_mat[i][j] = mp.S_mat[i][j];
      if (i == j) mp.M_mat[i][j] -= shift;
    }
  return mp;
}

using Mat3d = std::array<std::array<double, 3>, 3>;

/// Float-coefficient path: exact monomial integrals, double accumulation.
/// The pi factor is multiplied in.
inline std::pair<Mat3d, Mat3d> moment_matrices_d(const Cubic<double>& f) {
  Poly<double> f2 = f.to_poly() * f.to_poly();
  Mat3d S{}, M{};
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      double acc = 0;
      Poly<double> integrand = f2 * Poly<double>::variable(i) * Poly<double>::variable(j);
      for (auto& [e, c] : integrand.terms()) {
        PiRational m = integrate_monomial(e[0], e[1], e[2]);
        if (!m.is_zero()) acc += c * to_double(m.coeff());
      }
      S[i][j] = S[j][i] = acc * std::numbers::pi;
    }
  double shift = (4.0 / 15.0) * (S[0][0] + S[1][1] + S[2][2]);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M[i][j] = S[i][j] - (i == j ? shift : 0.0);
  return {S, M};
}

}  // namespace icosa
