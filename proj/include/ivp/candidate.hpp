#pragma once

#include <cassert>
#include <utility>

#include "ivp/numeric.hpp"
#include "ivp/poly.hpp"

namespace ivp {

// A rational polynomial in the canonical fraction form num/den: num has
// integer coefficients, den >= 1 and gcd(content(num), den) = 1. The zero
// polynomial is 0/1, and den = 1 exactly when the value lies in Z[X].
class IvpCandidate {
 public:
  IvpCandidate() : num_(), den_(1) {}

  static IvpCandidate make(ZPoly g, Int d) {
    assert(d != 0);
    if (d < 0) {
      g = -g;
      d = -d;
    }
    if (g.is_zero()) return IvpCandidate(ZPoly(), Int(1));
    Int e = boost::multiprecision::gcd(content(g), d);
    if (e > 1) {
      std::vector<Int> c = g.coeffs();
      for (auto& v : c) v /= e;
      g = ZPoly(std::move(c));
      d /= e;
    }
    return IvpCandidate(std::move(g), std::move(d));
  }

  static IvpCandidate from_qpoly(const QPoly& f) {
    Int d = 1;
    for (const auto& v : f.coeffs()) d = boost::multiprecision::lcm(d, denominator(v));
    std::vector<Int> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) c.push_back(numerator(v) * (d / denominator(v)));
    return make(ZPoly(std::move(c)), d);
  }

  const ZPoly& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_integer_poly() const { return den_ == 1; }
  bool is_zero() const { return num_.is_zero(); }

  QPoly to_qpoly() const {
    std::vector<Rat> c;
    c.reserve(num_.coeffs().size());
    for (const auto& v : num_.coeffs()) c.push_back(make_rat(v, den_));
    return QPoly(std::move(c));
  }

  Rat operator()(const Rat& x) const { return to_qpoly()(x); }

  friend bool operator==(const IvpCandidate& a, const IvpCandidate& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const IvpCandidate& a, const IvpCandidate& b) { return !(a == b); }

 private:
  IvpCandidate(ZPoly g, Int d) : num_(std::move(g)), den_(std::move(d)) {}
  ZPoly num_;
  Int den_;
};

inline IvpCandidate canonicalize(const ZPoly& g, const Int& d) { return IvpCandidate::make(g, d); }
inline IvpCandidate canonicalize(const QPoly& f) { return IvpCandidate::from_qpoly(f); }

// outer(f) for integer outer: Horner over a common power of f's denominator,
// so the result needs one exact canonicalization and no rational arithmetic.
inline IvpCandidate compose(const ZPoly& outer, const IvpCandidate& f) {
  if (outer.is_zero()) return IvpCandidate();
  const int m = outer.degree();
  ZPoly acc = ZPoly::constant(outer.coeff(m));
  Int dpow = 1;  // f.den()^(m - i) alongside the Horner loop
  for (int i = m - 1; i >= 0; --i) {
    dpow *= f.den();
    acc = acc * f.num() + ZPoly::constant(outer.coeff(i) * dpow);
  }
  return IvpCandidate::make(std::move(acc), dpow);
}

}  // namespace ivp
