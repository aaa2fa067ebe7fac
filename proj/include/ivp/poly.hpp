#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "ivp/errors.hpp"
#include "ivp/numeric.hpp"

namespace ivp {

// Dense univariate polynomial over an exact commutative ring T.
// coeffs()[i] is the coefficient of X^i; the top coefficient is nonzero
// unless the polynomial is zero (empty coefficient vector). The zero
// polynomial has no degree: degree() must not be called on it.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly zero() { return Poly(); }
  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
  static Poly monomial(int k, T coeff = T(1)) {
    std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
    c.back() = std::move(coeff);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const {
    assert(!is_zero());
    return static_cast<int>(c_.size()) - 1;
  }
  const T& leading() const {
    assert(!is_zero());
    return c_.back();
  }
  T coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return T(0);
    return c_[static_cast<std::size_t>(i)];
  }
  const std::vector<T>& coeffs() const { return c_; }

  bool is_monic() const { return !is_zero() && leading() == T(1); }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly operator-() const {
    std::vector<T> c = c_;
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> c = a.c_;
    for (auto& v : c) v = s * v;
    return Poly(std::move(c));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

using ZPoly = Poly<Int>;
using QPoly = Poly<Rat>;

// Euclidean division a = q*m + r with deg r < deg m, for monic m. Valid over
// any commutative ring precisely because m is monic.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod_monic(const Poly<T>& a, const Poly<T>& m) {
  if (m.is_zero() || !m.is_monic())
    throw NonMonicDivisor("divmod_monic: divisor must be monic");
  const int dm = m.degree();
  if (a.is_zero() || a.degree() < dm) return {Poly<T>(), a};
  std::vector<T> rem = a.coeffs();
  std::vector<T> quot(rem.size() - static_cast<std::size_t>(dm), T(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= dm; --i) {
    T c = rem[static_cast<std::size_t>(i)];
    if (c == T(0)) continue;
    quot[static_cast<std::size_t>(i - dm)] = c;
    for (int j = 0; j <= dm; ++j)
      rem[static_cast<std::size_t>(i - dm + j)] -= c * m.coeff(j);
  }
  return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

template <class T>
Poly<T> compose(const Poly<T>& outer, const Poly<T>& inner) {
  Poly<T> acc;
  for (int i = outer.is_zero() ? -1 : outer.degree(); i >= 0; --i)
    acc = acc * inner + Poly<T>::constant(outer.coeff(i));
  return acc;
}

// gcd of all coefficients (nonnegative); content of the zero polynomial is 0.
inline Int content(const ZPoly& g) {
  Int c = 0;
  for (const auto& v : g.coeffs()) c = boost::multiprecision::gcd(c, v);
  return c < 0 ? Int(-c) : c;
}

inline QPoly to_qpoly(const ZPoly& g) {
  std::vector<Rat> c;
  c.reserve(g.coeffs().size());
  for (const auto& v : g.coeffs()) c.emplace_back(v);
  return QPoly(std::move(c));
}

inline bool has_integer_coeffs(const QPoly& f) {
  for (const auto& v : f.coeffs())
    if (!is_integer(v)) return false;
  return true;
}

inline ZPoly to_zpoly(const QPoly& f) {
  std::vector<Int> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) {
    assert(is_integer(v));
    c.emplace_back(numerator(v));
  }
  return ZPoly(std::move(c));
}

}  // namespace ivp
