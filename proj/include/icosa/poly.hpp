#pragma once

#include <array>
#include <cstddef>
#include <map>

namespace icosa {

/// Sparse polynomial in x1, x2, x3 over a commutative ring S. Used for
/// symbolic expansion (squares of cubics, rotation substitution, Pfaffians
/// with entries linear in u); the fixed-degree Cubic type is the public face.
template <typename S>
class Poly {
 public:
  using Expo = std::array<int, 3>;

  Poly() = default;
  explicit Poly(S c) {
    if (!(c == S(0))) terms_[{0, 0, 0}] = std::move(c);
  }

  static Poly monomial(Expo e, S c = S(1)) {
    Poly p;
    if (!(c == S(0))) p.terms_[e] = std::move(c);
    return p;
  }
  static Poly variable(int i) {
    Expo e{0, 0, 0};
    e[i] = 1;
    return monomial(e);
  }

  const std::map<Expo, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Expo& e, const S& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!(c == S(0))) terms_[e] = c;
      return;
    }
    it->second += c;
    if (it->second == S(0)) terms_.erase(it);
  }

  Poly operator-() const {
    Poly r;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }

  friend Poly operator*(const Poly& x, const Poly& y) {
    Poly p;
    for (auto& [ex, cx] : x.terms_)
      for (auto& [ey, cy] : y.terms_)
        p.add_term({ex[0] + ey[0], ex[1] + ey[1], ex[2] + ey[2]}, cx * cy);
    return p;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly& operator*=(const S& c) {
    if (c == S(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }
  friend Poly operator*(const S& c, Poly p) { return p *= c; }

  friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }

  Poly derivative(int var) const {
    Poly d;
    for (auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Expo e2 = e;
      e2[var] -= 1;
      d.add_term(e2, S(e[var]) * c);
    }
    return d;
  }

  S evaluate(const std::array<S, 3>& x) const {
    S total(0);
    for (auto& [e, c] : terms_) {
      S t = c;
      for (int v = 0; v < 3; ++v)
        for (int k = 0; k < e[v]; ++k) t *= x[v];
      total += t;
    }
    return total;
  }

  /// Substitutes x_i -> sum_j m[i][j] x_j.
  Poly substitute_linear(const std::array<std::array<S, 3>, 3>& m) const {
    std::array<Poly, 3> lin;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        lin[i].add_term({j == 0 ? 1 : 0, j == 1 ? 1 : 0, j == 2 ? 1 : 0}, m[i][j]);
    Poly out;
    for (auto& [e, c] : terms_) {
      Poly t(c);
      for (int v = 0; v < 3; ++v)
        for (int k = 0; k < e[v]; ++k) t *= lin[v];
      out += t;
    }
    return out;
  }

 private:
  std::map<Expo, S> terms_;
};

}  // namespace icosa
