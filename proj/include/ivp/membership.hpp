#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ivp/candidate.hpp"
#include "ivp/errors.hpp"
#include "ivp/modpoly.hpp"
#include "ivp/parallel.hpp"
#include "ivp/poly.hpp"
#include "ivp/verdict.hpp"

namespace ivp {

// f in Int(Z): g(a) = 0 mod den for every residue a in [0, den). The witness
// of a failure is the smallest failing residue.
inline MembershipVerdict is_int_valued_on_Z(const IvpCandidate& f) {
  if (f.is_integer_poly()) return MembershipVerdict::yes();
  const Int& d = f.den();
  const ModPoly g = ModPoly::reduce(f.num(), d);
  for (Int a = 0; a < d; ++a)
    if (g(a) != 0) return MembershipVerdict::no(WitnessResidue{a});
  return MembershipVerdict::yes();
}

// All monic degree-n polynomials over Z/dZ, exactly once each. Index k maps
// to coefficients via base-d digits with the constant term least
// significant: k=0 -> X^n, k=1 -> X^n + 1, k=d -> X^n + X, ...
class MonicResiduePolyStream {
 public:
  MonicResiduePolyStream(int n, Int d) : n_(n), d_(std::move(d)), total_(pow_int(d_, static_cast<unsigned>(n_))) {}

  const Int& total() const { return total_; }

  ModPoly at(std::uint64_t k) const {
    std::vector<Int> c(static_cast<std::size_t>(n_) + 1, Int(0));
    Int rest = k;
    for (int i = 0; i < n_; ++i) {
      c[static_cast<std::size_t>(i)] = rest % d_;
      rest /= d_;
    }
    c.back() = 1;
    return ModPoly(d_, std::move(c));
  }

 private:
  int n_;
  Int d_;
  Int total_;
};

inline std::vector<ModPoly> enumerate_monic_residue_polys(int n, const Int& d, const Caps& caps = {}) {
  MonicResiduePolyStream stream(n, d);
  if (stream.total() > caps.enumeration)
    throw ResourceLimit("enumerate_monic_residue_polys: d^n exceeds enumeration cap");
  const std::uint64_t total = stream.total().convert_to<std::uint64_t>();
  std::vector<ModPoly> out;
  out.reserve(total);
  for (std::uint64_t k = 0; k < total; ++k) out.push_back(stream.at(k));
  return out;
}

// f in Int(M_n(Z)): g must be divisible mod den by every monic residue
// polynomial of degree n. Witness: the first failing divisor in stream
// order (which is also the lexicographically smallest).
inline MembershipVerdict is_int_valued_on_MnZ(const IvpCandidate& f, int n, const Caps& caps = {},
                                              unsigned jobs = 1) {
  if (f.is_integer_poly()) return MembershipVerdict::yes();
  const Int& d = f.den();
  MonicResiduePolyStream stream(n, d);
  if (stream.total() > caps.enumeration)
    throw ResourceLimit("is_int_valued_on_MnZ: d^n exceeds enumeration cap");
  const std::uint64_t total = stream.total().convert_to<std::uint64_t>();
  const ModPoly g = ModPoly::reduce(f.num(), d);
  auto divides = [&](std::uint64_t k) {
    return poly_divmod_monic(g, stream.at(k)).second.is_zero();
  };
  if (auto bad = first_failing_index(total, jobs, divides))
    return MembershipVerdict::no(WitnessMonicResiduePoly{stream.at(*bad)});
  return MembershipVerdict::yes();
}

// f in Int(M_n^p(Z)) = Z[X] + p*Q[X]: the remainder of g by p mod den must
// vanish.
inline MembershipVerdict is_int_valued_on_Mnp(const IvpCandidate& f, const ZPoly& p) {
  if (p.is_zero() || !p.is_monic() || p.degree() < 1)
    throw NonMonic("is_int_valued_on_Mnp: p must be monic of degree >= 1");
  if (f.is_integer_poly()) return MembershipVerdict::yes();
  const Int& d = f.den();
  const ModPoly g = ModPoly::reduce(f.num(), d);
  const ModPoly pbar = ModPoly::reduce(p, d);  // stays monic: leading 1 survives any den >= 2
  if (poly_divmod_monic(g, pbar).second.is_zero()) return MembershipVerdict::yes();
  return MembershipVerdict::no(WitnessMonicResiduePoly{pbar});
}

// Product over the canonical lifts (coefficients in [0, d)) of every monic
// degree-n residue polynomial, divided by d. Integer-valued over M_n(Z) by
// construction: mod d the numerator is a multiple of each monic divisor.
inline IvpCandidate generate_int_MnZ(int n, const Int& d, const Caps& caps = {}) {
  MonicResiduePolyStream stream(n, d);
  const Int degree = Int(n) * stream.total();
  if (degree > caps.degree)
    throw ResourceLimit("generate_int_MnZ: n*d^n exceeds degree cap");
  const std::uint64_t total = stream.total().convert_to<std::uint64_t>();
  ZPoly prod = ZPoly::constant(Int(1));
  for (std::uint64_t k = 0; k < total; ++k) prod = prod * stream.at(k).lift();
  return IvpCandidate::make(std::move(prod), d);
}

// Residue polynomials of degree < n over Z/dZ, exactly once each, counted
// with the constant coefficient as the most significant digit:
// 0, X^(n-1), ..., X, ..., 1, ...
class ResiduePolyStream {
 public:
  ResiduePolyStream(int n, Int d) : n_(n), d_(std::move(d)), total_(pow_int(d_, static_cast<unsigned>(n_))) {}

  const Int& total() const { return total_; }

  ModPoly at(std::uint64_t k) const {
    std::vector<Int> c(static_cast<std::size_t>(n_), Int(0));
    Int rest = k;
    for (int i = n_ - 1; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] = rest % d_;
      rest /= d_;
    }
    return ModPoly(d_, std::move(c));
  }

 private:
  int n_;
  Int d_;
  Int total_;
};

// f integer-valued on the subalgebra Z[C_p]: g(h(C_p)) = 0 mod den for every
// residue polynomial h of degree < n, evaluated inside (Z/dZ)[X]/(p), which
// the companion matrix embeds faithfully.
inline MembershipVerdict is_int_valued_on_subalgebra(const IvpCandidate& f, const ZPoly& p,
                                                     const Caps& caps = {}, unsigned jobs = 1) {
  if (p.is_zero() || !p.is_monic() || p.degree() < 1)
    throw NonMonic("is_int_valued_on_subalgebra: p must be monic of degree >= 1");
  if (f.is_integer_poly()) return MembershipVerdict::yes();
  const Int& d = f.den();
  const int n = p.degree();
  ResiduePolyStream stream(n, d);
  if (stream.total() > caps.enumeration)
    throw ResourceLimit("is_int_valued_on_subalgebra: d^n exceeds enumeration cap");
  const std::uint64_t total = stream.total().convert_to<std::uint64_t>();
  const ModPoly g = ModPoly::reduce(f.num(), d);
  const ModPoly pbar = ModPoly::reduce(p, d);
  auto vanishes = [&](std::uint64_t k) {
    const ModPoly h = stream.at(k);
    ModPoly acc(d);
    for (int i = g.is_zero() ? -1 : g.degree(); i >= 0; --i) {
      acc = mulmod(acc, h, pbar);
      acc = acc + ModPoly(d, {g.coeff(i)});
    }
    return acc.is_zero();
  };
  if (auto bad = first_failing_index(total, jobs, vanishes))
    return MembershipVerdict::no(WitnessResiduePoly{stream.at(*bad)});
  return MembershipVerdict::yes();
}

}  // namespace ivp
