#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <utility>

namespace ivp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Canonical residue of a modulo d, in [0, d). Requires d > 0.
inline Int mod_reduce(const Int& a, const Int& d) {
  Int r = a % d;
  if (r < 0) r += d;
  return r;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int pow_int(const Int& base, unsigned e) {
  return boost::multiprecision::pow(base, e);
}

inline Int isqrt(const Int& x) { return boost::multiprecision::sqrt(x); }

inline bool is_perfect_square(const Int& x, Int* root = nullptr) {
  if (x < 0) return false;
  Int s = isqrt(x);
  if (s * s != x) return false;
  if (root) *root = s;
  return true;
}

inline Rat make_rat(const Int& num, const Int& den) {
  return Rat(num) / Rat(den);
}

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// n = square_root^2 * squarefree, with the sign carried by the squarefree
// part. Requires n != 0; factors by trial division (desk-scale inputs).
struct SquarefreeSplit {
  Int square_root;
  Int squarefree;
};

inline SquarefreeSplit squarefree_split(Int n) {
  const bool neg = n < 0;
  if (neg) n = -n;
  Int root = 1, sf = 1;
  Int p = 2;
  while (p * p <= n) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      root *= pow_int(p, e / 2);
      if (e % 2) sf *= p;
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) sf *= n;  // leftover prime
  return {root, neg ? Int(-sf) : sf};
}

}  // namespace ivp
