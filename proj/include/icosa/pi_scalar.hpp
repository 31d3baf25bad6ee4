#pragma once

#include <numbers>
#include <ostream>
#include <stdexcept>

#include "icosa/golden.hpp"
#include "icosa/rational.hpp"

namespace icosa {

/// Exact value coeff * pi^k with k >= 0. Addition and comparison are only
/// defined between values of equal pi power; mixing powers is an error, not
/// a promotion.
template <typename S>
class PiScalar {
 public:
  PiScalar() : coeff_(0), pi_power_(0) {}
  PiScalar(S coeff, int pi_power = 0) : coeff_(std::move(coeff)), pi_power_(pi_power) {
    if (pi_power < 0) throw std::invalid_argument("PiScalar: negative pi power");
    if (coeff_ == S(0)) pi_power_ = 0;
  }

  const S& coeff() const { return coeff_; }
  int pi_power() const { return pi_power_; }
  bool is_zero() const { return coeff_ == S(0); }

  PiScalar operator-() const { return PiScalar(-coeff_, pi_power_); }

  friend PiScalar operator+(const PiScalar& x, const PiScalar& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.pi_power_ != y.pi_power_)
      throw std::invalid_argument("PiScalar: addition of mixed pi powers");
    return PiScalar(x.coeff_ + y.coeff_, x.pi_power_);
  }
  friend PiScalar operator-(const PiScalar& x, const PiScalar& y) { return x + (-y); }
  friend PiScalar operator*(const PiScalar& x, const PiScalar& y) {
    return PiScalar(x.coeff_ * y.coeff_, x.pi_power_ + y.pi_power_);
  }
  PiScalar& operator+=(const PiScalar& y) { return *this = *this + y; }
  PiScalar& operator-=(const PiScalar& y) { return *this = *this - y; }
  PiScalar& operator*=(const PiScalar& y) { return *this = *this * y; }

  friend PiScalar operator*(const S& c, const PiScalar& x) {
    return PiScalar(c * x.coeff_, x.pi_power_);
  }

  friend bool operator==(const PiScalar& x, const PiScalar& y) {
    if (x.is_zero() && y.is_zero()) return true;
    return x.pi_power_ == y.pi_power_ && x.coeff_ == y.coeff_;
  }
  friend bool operator!=(const PiScalar& x, const PiScalar& y) { return !(x == y); }

  int sgn() const { return sign(coeff_); }

  friend int compare(const PiScalar& x, const PiScalar& y) {
    return (x - y).sgn();
  }

  double to_double() const {
    double v = icosa::to_double(coeff_);
    for (int i = 0; i < pi_power_; ++i) v *= std::numbers::pi;
    return v;
  }

  friend std::ostream& operator<<(std::ostream& os, const PiScalar& x) {
    os << x.coeff_;
    if (x.pi_power_ == 1) os << "*pi";
    else if (x.pi_power_ > 1) os << "*pi^" << x.pi_power_;
    return os;
  }

 private:
  S coeff_;
  int pi_power_;
};

using PiRational = PiScalar<Rational>;
using PiGolden = PiScalar<Golden>;

template <typename S>
int sign(const PiScalar<S>& x) { return x.sgn(); }

template <typename S>
double to_double(const PiScalar<S>& x) { return x.to_double(); }

}  // namespace icosa
