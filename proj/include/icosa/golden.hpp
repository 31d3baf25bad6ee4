#pragma once

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "icosa/rational.hpp"

namespace icosa {

/// Element a + b*sqrt(5) of the real quadratic field Q(sqrt 5).
///
/// The stored irrationality is sqrt(5) itself; the golden ratio
/// phi = (1 + sqrt 5)/2 is exposed as a named constant.
class Golden {
 public:
  Golden() : a_(0), b_(0) {}
  Golden(Rational a) : a_(std::move(a)), b_(0) {}
  Golden(int a) : a_(a), b_(0) {}
  Golden(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Golden sqrt5() { return Golden(0, 1); }
  static Golden phi() { return Golden(Rational(1, 2), Rational(1, 2)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  Golden conj() const { return Golden(a_, -b_); }

  /// a^2 - 5 b^2, the field norm x * conj(x).
  Rational norm() const { return a_ * a_ - 5 * b_ * b_; }

  Golden operator-() const { return Golden(-a_, -b_); }

  Golden& operator+=(const Golden& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Golden& operator-=(const Golden& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Golden& operator*=(const Golden& o) {
    Rational a = a_ * o.a_ + 5 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }

  Golden inv() const {
    Rational n = norm();
    if (n == 0) throw std::domain_error("Golden: division by zero");
    return Golden(a_ / n, -b_ / n);
  }

  friend Golden operator+(Golden x, const Golden& y) { return x += y; }
  friend Golden operator-(Golden x, const Golden& y) { return x -= y; }
  friend Golden operator*(Golden x, const Golden& y) { return x *= y; }
  friend Golden operator/(const Golden& x, const Golden& y) { return x * y.inv(); }
  Golden& operator/=(const Golden& y) { return *this = *this * y.inv(); }

  friend bool operator==(const Golden& x, const Golden& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Golden& x, const Golden& y) { return !(x == y); }

  /// Total order compatible with the real embedding sqrt(5) > 0.
  friend bool operator<(const Golden& x, const Golden& y) {
    return (x - y).sgn() < 0;
  }

  /// Exact sign under the embedding sqrt(5) ~ 2.236...
  int sgn() const {
    int sa = sign(a_), sb = sign(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b have opposite signs: compare a^2 with 5 b^2.
    int cmp = (a_ * a_ < 5 * b_ * b_) ? -1 : (a_ * a_ == 5 * b_ * b_ ? 0 : 1);
    return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
  }

  double to_double() const {
    return icosa::to_double(a_) + icosa::to_double(b_) * std::sqrt(5.0);
  }
  long double to_long_double() const {
    return icosa::to_long_double(a_) + icosa::to_long_double(b_) * sqrtl(5.0L);
  }

  friend std::ostream& operator<<(std::ostream& os, const Golden& g) {
    os << to_string(g.a_);
    if (g.b_ != 0) os << (sign(g.b_) < 0 ? "" : "+") << to_string(g.b_) << "*sqrt5";
    return os;
  }

 private:
  Rational a_, b_;
};

inline int sign(const Golden& g) { return g.sgn(); }
inline double to_double(const Golden& g) { return g.to_double(); }
inline long double to_long_double(const Golden& g) { return g.to_long_double(); }
inline Golden conj(const Golden& g) { return g.conj(); }

}  // namespace icosa
