#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "ivp/errors.hpp"
#include "ivp/numeric.hpp"
#include "ivp/poly.hpp"

namespace ivp {

// Dense polynomial over Z/dZ, d >= 2. Coefficients are canonical residues in
// [0, d); leading zero residues are stripped, so the zero polynomial is the
// empty coefficient vector.
class ModPoly {
 public:
  explicit ModPoly(Int modulus) : d_(std::move(modulus)) { assert(d_ >= 2); }
  ModPoly(Int modulus, std::vector<Int> coeffs) : d_(std::move(modulus)), c_(std::move(coeffs)) {
    assert(d_ >= 2);
    for (auto& v : c_) v = mod_reduce(v, d_);
    normalize();
  }

  static ModPoly reduce(const ZPoly& g, const Int& d) {
    return ModPoly(d, g.coeffs());
  }

  const Int& modulus() const { return d_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const {
    assert(!is_zero());
    return static_cast<int>(c_.size()) - 1;
  }
  const Int& leading() const {
    assert(!is_zero());
    return c_.back();
  }
  Int coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return Int(0);
    return c_[static_cast<std::size_t>(i)];
  }
  const std::vector<Int>& coeffs() const { return c_; }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  // Lift with coefficients in [0, d).
  ZPoly lift() const { return ZPoly(c_); }

  Int operator()(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod_reduce(acc * x + *it, d_);
    return acc;
  }

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    a.check(b);
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return ModPoly(a.d_, std::move(c));
  }
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    a.check(b);
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return ModPoly(a.d_, std::move(c));
  }
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return ModPoly(a.d_);
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return ModPoly(a.d_, std::move(c));
  }
  friend ModPoly operator*(const Int& s, const ModPoly& a) {
    std::vector<Int> c = a.c_;
    for (auto& v : c) v *= s;
    return ModPoly(a.d_, std::move(c));
  }

  friend bool operator==(const ModPoly& a, const ModPoly& b) {
    return a.d_ == b.d_ && a.c_ == b.c_;
  }
  friend bool operator!=(const ModPoly& a, const ModPoly& b) { return !(a == b); }

 private:
  void check(const ModPoly& o) const {
    if (d_ != o.d_) throw ModulusMismatch("mixed moduli in ModPoly arithmetic");
  }
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  Int d_;
  std::vector<Int> c_;
};

// a = q*m + r over Z/dZ, deg r < deg m; m must be monic (unit leading
// residues other than 1 are not accepted).
inline std::pair<ModPoly, ModPoly> poly_divmod_monic(const ModPoly& a, const ModPoly& m) {
  if (a.modulus() != m.modulus())
    throw ModulusMismatch("poly_divmod_monic: moduli differ");
  if (m.is_zero() || m.degree() < 1 || !m.is_monic())
    throw NonMonicDivisor("poly_divmod_monic: divisor must be monic of degree >= 1");
  const Int& d = a.modulus();
  const int dm = m.degree();
  if (a.is_zero() || a.degree() < dm) return {ModPoly(d), a};
  std::vector<Int> rem = a.coeffs();
  std::vector<Int> quot(rem.size() - static_cast<std::size_t>(dm), Int(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= dm; --i) {
    Int c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - dm)] = c;
    for (int j = 0; j <= dm; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - dm + j)];
      slot = mod_reduce(slot - c * m.coeff(j), d);
    }
  }
  return {ModPoly(d, std::move(quot)), ModPoly(d, std::move(rem))};
}

// Product modulo a monic polynomial: arithmetic in (Z/dZ)[X]/(m).
inline ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m) {
  return poly_divmod_monic(a * b, m).second;
}

// gcd over (Z/pZ)[X] for prime p, normalized monic (or zero).
inline ModPoly poly_gcd_prime(ModPoly a, ModPoly b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatch("poly_gcd_prime: moduli differ");
  const Int p = a.modulus();
  auto make_monic = [&p](const ModPoly& f) {
    if (f.is_zero() || f.leading() == 1) return f;
    // leading^-1 via Fermat
    Int inv = 1, base = f.leading(), e = p - 2;
    while (e > 0) {
      if ((e & 1) != 0) inv = mod_reduce(inv * base, p);
      base = mod_reduce(base * base, p);
      e >>= 1;
    }
    return inv * f;
  };
  a = make_monic(a);
  b = make_monic(b);
  while (!b.is_zero()) {
    ModPoly r = (b.degree() >= 1) ? poly_divmod_monic(a, b).second : ModPoly(p);
    a = b;
    b = make_monic(r);
  }
  return a;
}

// base^e mod (m, p); m monic, p prime.
inline ModPoly powmod_prime(ModPoly base, Int e, const ModPoly& m) {
  ModPoly acc(m.modulus(), {Int(1)});
  base = poly_divmod_monic(base, m).second;
  while (e > 0) {
    if ((e & 1) != 0) acc = mulmod(acc, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return acc;
}

}  // namespace ivp
