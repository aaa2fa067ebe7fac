#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ivp/candidate.hpp"
#include "ivp/errors.hpp"
#include "ivp/hnf.hpp"
#include "ivp/matrix.hpp"
#include "ivp/membership.hpp"
#include "ivp/modpoly.hpp"
#include "ivp/parallel.hpp"
#include "ivp/verdict.hpp"

namespace ivp {

// Enumerates M_n(Z/dZ) in row-major lexicographic entry order, optionally
// filtered to a target characteristic polynomial. Each matrix appears
// exactly once; the unfiltered count is d^(n^2).
class MatrixClassStream {
 public:
  MatrixClassStream(int n, Int d, std::optional<ModPoly> target_charpoly = std::nullopt,
                    const Caps& caps = {})
      : n_(n), d_(std::move(d)), target_(std::move(target_charpoly)) {
    const Int space = pow_int(d_, static_cast<unsigned>(n_ * n_));
    if (space > caps.matrix_enumeration)
      throw ResourceLimit("MatrixClassStream: d^(n^2) exceeds matrix enumeration cap");
    total_ = space.convert_to<std::uint64_t>();
  }

  int dim() const { return n_; }
  const Int& modulus() const { return d_; }
  std::uint64_t total_space() const { return total_; }

  // Entry (i, j) is digit n^2-1-(i*n+j) of k in base d, so the first entry
  // is the most significant and index order is row-major lexicographic.
  static ModMat matrix_at(std::uint64_t k, int n, const Int& d) {
    Mat<Int> m(n);
    Int rest = k;
    for (int t = n * n - 1; t >= 0; --t) {
      m(t / n, t % n) = rest % d;
      rest /= d;
    }
    return ModMat(d, std::move(m));
  }

  std::optional<ModMat> next() {
    while (next_ < total_) {
      ModMat m = matrix_at(next_++, n_, d_);
      if (!target_ || charpoly(m) == *target_) return m;
    }
    return std::nullopt;
  }

  void reset() { next_ = 0; }

 private:
  int n_;
  Int d_;
  std::optional<ModPoly> target_;
  std::uint64_t total_ = 0;
  std::uint64_t next_ = 0;
};

inline MatrixClassStream enumerate_with_charpoly(const ZPoly& p, const Int& d,
                                                 const Caps& caps = {}) {
  if (p.is_zero() || !p.is_monic() || p.degree() < 1)
    throw NonMonic("enumerate_with_charpoly: p must be monic of degree >= 1");
  return MatrixClassStream(p.degree(), d, ModPoly::reduce(p, d), caps);
}

// Exhaustive membership oracle for Int(M_n(Z)): g(M) = 0 mod den over every
// matrix of M_n(Z/dZ). Witness: the first failing matrix in row-major
// lexicographic order.
inline MembershipVerdict oracle_int_MnZ(const IvpCandidate& f, int n, const Caps& caps = {},
                                        unsigned jobs = 1) {
  if (f.is_integer_poly()) return MembershipVerdict::yes();
  const Int& d = f.den();
  const Int space = pow_int(d, static_cast<unsigned>(n * n));
  if (space > caps.matrix_enumeration)
    throw ResourceLimit("oracle_int_MnZ: d^(n^2) exceeds matrix enumeration cap");
  const std::uint64_t total = space.convert_to<std::uint64_t>();
  const ModPoly g = ModPoly::reduce(f.num(), d);
  auto annihilated = [&](std::uint64_t k) {
    return mat_poly_eval(g, MatrixClassStream::matrix_at(k, n, d)).is_zero();
  };
  if (auto bad = first_failing_index(total, jobs, annihilated))
    return MembershipVerdict::no(WitnessResidueMatrix{MatrixClassStream::matrix_at(*bad, n, d)});
  return MembershipVerdict::yes();
}

// Canonical generating set of the polynomials of degree <= degree_bound over
// Z/dZ annihilating a fixed matrix.
struct NullIdealSpan {
  Int modulus;
  int degree_bound = 0;
  std::vector<ModPoly> generators;

  friend bool operator==(const NullIdealSpan&, const NullIdealSpan&) = default;
};

namespace detail {

// Rows index the n^2 matrix coordinates, column i holds vec(M^i).
inline IntRows annihilator_relation_rows(const ModMat& m, int degree_bound) {
  const int n = m.dim();
  const int cols = degree_bound + 1;
  IntRows rows(static_cast<std::size_t>(n) * n,
               std::vector<Int>(static_cast<std::size_t>(cols), Int(0)));
  ModMat power = ModMat::identity(n, m.modulus());
  for (int i = 0; i <= degree_bound; ++i) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        rows[static_cast<std::size_t>(r) * n + c][static_cast<std::size_t>(i)] = power(r, c);
    if (i < degree_bound) power = power * m;
  }
  return rows;
}

inline NullIdealSpan span_from_kernel(const IntRows& gens, const Int& d, int degree_bound) {
  NullIdealSpan span{d, degree_bound, {}};
  span.generators.reserve(gens.size());
  for (const auto& v : gens) span.generators.emplace_back(d, v);
  return span;
}

}  // namespace detail

inline NullIdealSpan null_ideal_span(const ModMat& m, int degree_bound) {
  const IntRows rows = detail::annihilator_relation_rows(m, degree_bound);
  const IntRows gens = kernel_mod_d(rows, m.dim() * m.dim(), degree_bound + 1, m.modulus());
  return detail::span_from_kernel(gens, m.modulus(), degree_bound);
}

// Intersection over every matrix with characteristic polynomial p of its
// degree-bounded null span: one kernel of the vertically stacked relation
// rows.
inline NullIdealSpan intersect_null_ideals(const ZPoly& p, const Int& d, int degree_bound,
                                           const Caps& caps = {}) {
  MatrixClassStream stream = enumerate_with_charpoly(p, d, caps);
  IntRows stacked;
  while (auto m = stream.next()) {
    IntRows rows = detail::annihilator_relation_rows(*m, degree_bound);
    for (auto& r : rows) stacked.push_back(std::move(r));
  }
  const IntRows gens =
      kernel_mod_d(stacked, static_cast<int>(stacked.size()), degree_bound + 1, d);
  return detail::span_from_kernel(gens, d, degree_bound);
}

// Canonical span of the multiples p, X*p, ..., X^(bound-deg p)*p mod d; what
// a degree-bounded null-ideal intersection is expected to equal.
inline NullIdealSpan principal_span(const ZPoly& p, const Int& d, int degree_bound) {
  const ModPoly pbar = ModPoly::reduce(p, d);
  IntRows gens;
  if (!pbar.is_zero()) {
    for (int k = 0; k + pbar.degree() <= degree_bound; ++k) {
      const ModPoly shifted = ModPoly(d, ZPoly::monomial(k).coeffs()) * pbar;
      std::vector<Int> v(static_cast<std::size_t>(degree_bound) + 1, Int(0));
      for (int i = 0; i <= shifted.degree(); ++i) v[static_cast<std::size_t>(i)] = shifted.coeff(i);
      gens.push_back(std::move(v));
    }
  }
  return detail::span_from_kernel(canonical_span(std::move(gens), degree_bound + 1, d), d,
                                  degree_bound);
}

// Coordinates of f(C_p) in the basis {I, C_p, ..., C_p^(n-1)} of Z[C_p],
// obtained from the monic division g = q*p + r: f(C_p) = r(C_p)/den, so f is
// in Int(M_n^p(Z)) exactly when den divides every coefficient of r.
inline std::optional<std::vector<Int>> image_in_subalgebra(const IvpCandidate& f, const ZPoly& p) {
  if (p.is_zero() || !p.is_monic() || p.degree() < 1)
    throw NonMonic("image_in_subalgebra: p must be monic of degree >= 1");
  const int n = p.degree();
  const ZPoly r = divmod_monic(f.num(), p).second;
  std::vector<Int> coords(static_cast<std::size_t>(n), Int(0));
  for (int i = 0; i < n; ++i) {
    const Int c = r.coeff(i);
    if (c % f.den() != 0) return std::nullopt;
    coords[static_cast<std::size_t>(i)] = c / f.den();
  }
  return coords;
}

}  // namespace ivp
