#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "ivp/errors.hpp"
#include "ivp/modpoly.hpp"
#include "ivp/numeric.hpp"
#include "ivp/poly.hpp"

namespace ivp {

// Square matrix over an exact ring T, row-major.
template <class T>
class Mat {
 public:
  explicit Mat(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, T(0)) { assert(n >= 1); }
  Mat(int n, std::vector<T> entries) : n_(n), e_(std::move(entries)) {
    assert(e_.size() == static_cast<std::size_t>(n) * n);
  }

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int dim() const { return n_; }
  T& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const T& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<T>& entries() const { return e_; }

  bool is_zero() const {
    for (const auto& v : e_)
      if (v != T(0)) return false;
    return true;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    assert(a.n_ == b.n_);
    Mat c(a.n_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
    return c;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    assert(a.n_ == b.n_);
    Mat c(a.n_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
    return c;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    assert(a.n_ == b.n_);
    Mat c(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (int j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Mat operator*(const T& s, const Mat& a) {
    Mat c(a.n_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = s * a.e_[i];
    return c;
  }

  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  int n_;
  std::vector<T> e_;
};

using ZMat = Mat<Int>;
using QMat = Mat<Rat>;

inline QMat to_qmat(const ZMat& m) {
  std::vector<Rat> e;
  e.reserve(m.entries().size());
  for (const auto& v : m.entries()) e.emplace_back(v);
  return QMat(m.dim(), std::move(e));
}

inline bool has_integer_entries(const QMat& m) {
  for (const auto& v : m.entries())
    if (!is_integer(v)) return false;
  return true;
}

// Square matrix over Z/dZ with canonical residue entries.
class ModMat {
 public:
  ModMat(int n, Int modulus) : d_(std::move(modulus)), m_(n) { assert(d_ >= 2); }
  ModMat(Int modulus, Mat<Int> m) : d_(std::move(modulus)), m_(std::move(m)) {
    assert(d_ >= 2);
    for (int i = 0; i < m_.dim(); ++i)
      for (int j = 0; j < m_.dim(); ++j) m_(i, j) = mod_reduce(m_(i, j), d_);
  }

  static ModMat reduce(const ZMat& m, const Int& d) { return ModMat(d, m); }
  static ModMat identity(int n, const Int& d) { return ModMat(d, Mat<Int>::identity(n)); }

  int dim() const { return m_.dim(); }
  const Int& modulus() const { return d_; }
  const Int& operator()(int i, int j) const { return m_(i, j); }
  const Mat<Int>& lift() const { return m_; }  // entries already in [0, d)
  bool is_zero() const { return m_.is_zero(); }

  friend ModMat operator+(const ModMat& a, const ModMat& b) {
    a.check(b);
    return ModMat(a.d_, a.m_ + b.m_);
  }
  friend ModMat operator*(const ModMat& a, const ModMat& b) {
    a.check(b);
    return ModMat(a.d_, a.m_ * b.m_);
  }
  friend ModMat operator*(const Int& s, const ModMat& a) { return ModMat(a.d_, s * a.m_); }

  friend bool operator==(const ModMat& a, const ModMat& b) { return a.d_ == b.d_ && a.m_ == b.m_; }
  friend bool operator!=(const ModMat& a, const ModMat& b) { return !(a == b); }

 private:
  void check(const ModMat& o) const {
    if (d_ != o.d_) throw ModulusMismatch("mixed moduli in ModMat arithmetic");
  }
  Int d_;
  Mat<Int> m_;
};

namespace rings {

struct IntRing {
  using value_type = Int;
  Int zero() const { return 0; }
  Int one() const { return 1; }
  Int add(const Int& a, const Int& b) const { return a + b; }
  Int sub(const Int& a, const Int& b) const { return a - b; }
  Int mul(const Int& a, const Int& b) const { return a * b; }
};

struct RatRing {
  using value_type = Rat;
  Rat zero() const { return 0; }
  Rat one() const { return 1; }
  Rat add(const Rat& a, const Rat& b) const { return a + b; }
  Rat sub(const Rat& a, const Rat& b) const { return a - b; }
  Rat mul(const Rat& a, const Rat& b) const { return a * b; }
};

struct ModRing {
  Int d;
  using value_type = Int;
  Int zero() const { return 0; }
  Int one() const { return mod_reduce(1, d); }
  Int add(const Int& a, const Int& b) const { return mod_reduce(a + b, d); }
  Int sub(const Int& a, const Int& b) const { return mod_reduce(a - b, d); }
  Int mul(const Int& a, const Int& b) const { return mod_reduce(a * b, d); }
};

}  // namespace rings

// Samuelson–Berkowitz: coefficients of det(X*I - A), low degree first.
// Division-free, so it is valid over Z, Q and Z/dZ alike (composite d
// included, where elimination-based charpoly would be unsound).
template <class Ring>
std::vector<typename Ring::value_type> berkowitz_charpoly(
    const std::vector<typename Ring::value_type>& a, int n, const Ring& R) {
  using T = typename Ring::value_type;
  auto at = [&](int i, int j) -> const T& { return a[static_cast<std::size_t>(i) * n + j]; };
  // p holds charpoly of the leading r x r block, highest degree first.
  std::vector<T> p{R.one()};
  for (int r = 0; r < n; ++r) {
    // Toeplitz column: 1, -A[r][r], -(row . col), -(row . M . col), ...
    std::vector<T> col(static_cast<std::size_t>(r) + 2, R.zero());
    col[0] = R.one();
    col[1] = R.sub(R.zero(), at(r, r));
    if (r > 0) {
      std::vector<T> v(static_cast<std::size_t>(r));  // runs through M^k . S
      for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(i)] = at(i, r);
      for (int k = 2; k <= r + 1; ++k) {
        T dot = R.zero();
        for (int i = 0; i < r; ++i) dot = R.add(dot, R.mul(at(r, i), v[static_cast<std::size_t>(i)]));
        col[static_cast<std::size_t>(k)] = R.sub(R.zero(), dot);
        if (k == r + 1) break;
        std::vector<T> w(static_cast<std::size_t>(r), R.zero());
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) w[static_cast<std::size_t>(i)] = R.add(w[static_cast<std::size_t>(i)], R.mul(at(i, j), v[static_cast<std::size_t>(j)]));
        v = std::move(w);
      }
    }
    std::vector<T> q(static_cast<std::size_t>(r) + 2, R.zero());
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < p.size() && j <= i; ++j)
        if (i - j < col.size()) q[i] = R.add(q[i], R.mul(col[i - j], p[j]));
    p = std::move(q);
  }
  std::vector<T> low_first(p.rbegin(), p.rend());
  return low_first;
}

inline ZPoly charpoly(const ZMat& m) {
  return ZPoly(berkowitz_charpoly(m.entries(), m.dim(), rings::IntRing{}));
}
inline QPoly charpoly(const QMat& m) {
  return QPoly(berkowitz_charpoly(m.entries(), m.dim(), rings::RatRing{}));
}
inline ModPoly charpoly(const ModMat& m) {
  return ModPoly(m.modulus(),
                 berkowitz_charpoly(m.lift().entries(), m.dim(), rings::ModRing{m.modulus()}));
}

// Horner evaluation g(M); the constant term contributes g_0 * I.
template <class T>
Mat<T> mat_poly_eval(const Poly<T>& g, const Mat<T>& m) {
  Mat<T> acc(m.dim());
  for (int i = g.is_zero() ? -1 : g.degree(); i >= 0; --i) {
    acc = acc * m;
    for (int k = 0; k < m.dim(); ++k) acc(k, k) += g.coeff(i);
  }
  return acc;
}

inline QMat mat_poly_eval(const ZPoly& g, const QMat& m) { return mat_poly_eval(to_qpoly(g), m); }

inline ModMat mat_poly_eval(const ModPoly& g, const ModMat& m) {
  if (g.modulus() != m.modulus())
    throw ModulusMismatch("mat_poly_eval: polynomial and matrix moduli differ");
  Mat<Int> acc(m.dim());
  const Int& d = m.modulus();
  for (int i = g.is_zero() ? -1 : g.degree(); i >= 0; --i) {
    acc = acc * m.lift();
    for (int k = 0; k < m.dim(); ++k) acc(k, k) += g.coeff(i);
    for (int r = 0; r < m.dim(); ++r)
      for (int c = 0; c < m.dim(); ++c) acc(r, c) = mod_reduce(acc(r, c), d);
  }
  return ModMat(d, std::move(acc));
}

inline ModMat mat_poly_eval(const ZPoly& g, const ModMat& m) {
  return mat_poly_eval(ModPoly::reduce(g, m.modulus()), m);
}

// Companion matrix of a monic p: ones on the subdiagonal, last column holds
// the negated low coefficients; charpoly(companion(p)) == p.
inline ZMat companion(const ZPoly& p) {
  if (p.is_zero() || !p.is_monic() || p.degree() < 1)
    throw NonMonic("companion: requires a monic polynomial of degree >= 1");
  const int n = p.degree();
  ZMat c(n);
  for (int i = 0; i + 1 < n; ++i) c(i + 1, i) = 1;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i);
  return c;
}

}  // namespace ivp
