#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "ivp/candidate.hpp"
#include "ivp/errors.hpp"
#include "ivp/matrix.hpp"
#include "ivp/membership.hpp"
#include "ivp/modpoly.hpp"
#include "ivp/parallel.hpp"
#include "ivp/poly.hpp"
#include "ivp/verdict.hpp"

namespace ivp {

struct Reducible : IvpError {
  ZPoly factor;
  explicit Reducible(ZPoly f) : IvpError("polynomial is reducible"), factor(std::move(f)) {}
};

struct IrreducibilityUnknown : IvpError {
  using IvpError::IvpError;
};

struct DomainError : IvpError {
  using IvpError::IvpError;
};

namespace detail {

inline std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  Int p = 2;
  while (p * p <= n) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// f irreducible over F_p implies f irreducible over Z (f monic). Rabin:
// X^(p^n) = X mod f and gcd(X^(p^(n/q)) - X, f) = 1 for each prime q | n.
inline bool rabin_irreducible_mod_p(const ZPoly& f, const Int& p) {
  const int n = f.degree();
  const ModPoly fbar = ModPoly::reduce(f, p);
  const ModPoly x(p, {Int(0), Int(1)});
  const ModPoly x_red = poly_divmod_monic(x, fbar).second;
  if (powmod_prime(x, pow_int(p, static_cast<unsigned>(n)), fbar) != x_red) return false;
  for (const Int& q : prime_factors(n)) {
    const unsigned e = static_cast<unsigned>(n / q.convert_to<int>());
    const ModPoly diff = powmod_prime(x, pow_int(p, e), fbar) - x_red;
    const ModPoly g = poly_gcd_prime(diff, fbar);
    if (g.is_zero() || g.degree() != 0) return false;
  }
  return true;
}

// All divisors of |n| (both signs are the caller's business). Trial-division
// factorization with a step budget; nullopt when the budget runs out.
inline std::optional<std::vector<Int>> divisors(Int n, std::uint64_t step_cap = 2'000'000) {
  if (n < 0) n = -n;
  assert(n != 0);
  std::vector<std::pair<Int, unsigned>> fact;
  Int p = 2;
  std::uint64_t steps = 0;
  while (p * p <= n) {
    if (++steps > step_cap) return std::nullopt;
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fact.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) fact.emplace_back(n, 1);
  std::vector<Int> divs{Int(1)};
  for (const auto& [q, e] : fact) {
    const std::size_t base = divs.size();
    Int qk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      qk *= q;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * qk);
    }
    if (divs.size() > 100'000) return std::nullopt;
  }
  return divs;
}

}  // namespace detail

enum class IrreducibilityStatus { irreducible, reducible, unknown };

struct IrreducibilityOutcome {
  IrreducibilityStatus status;
  std::optional<ZPoly> factor;  // present when reducible
};

// Certification ladder: integer-root test (complete), full quadratic-split
// search for quartics, mod-p certificates and a bounded monic-factor search
// above degree 4. Degrees <= 4 are always decided; beyond that the outcome
// may be unknown.
inline IrreducibilityOutcome certify_irreducibility(const ZPoly& p, const Caps& caps = {}) {
  if (p.is_zero() || !p.is_monic() || p.degree() < 1)
    throw NonMonic("certify_irreducibility: requires monic of degree >= 1");
  const int n = p.degree();
  if (n == 1) return {IrreducibilityStatus::irreducible, std::nullopt};

  if (p.coeff(0) == 0)
    return {IrreducibilityStatus::reducible, ZPoly({Int(0), Int(1)})};
  bool roots_complete = true;
  if (auto divs = detail::divisors(p.coeff(0))) {
    for (const Int& v : *divs)
      for (const Int& a : {v, Int(-v)})
        if (p(a) == 0) return {IrreducibilityStatus::reducible, ZPoly({-a, Int(1)})};
  } else {
    roots_complete = false;
  }
  if (n <= 3)
    return roots_complete
               ? IrreducibilityOutcome{IrreducibilityStatus::irreducible, std::nullopt}
               : IrreducibilityOutcome{IrreducibilityStatus::unknown, std::nullopt};

  if (n == 4) {
    // p = (X^2 + aX + b)(X^2 + cX + e): solve over the divisor pairs b*e = p0.
    if (!roots_complete) return {IrreducibilityStatus::unknown, std::nullopt};
    const Int p0 = p.coeff(0), p1 = p.coeff(1), p2 = p.coeff(2), p3 = p.coeff(3);
    auto divs = detail::divisors(p0);
    if (!divs) return {IrreducibilityStatus::unknown, std::nullopt};
    for (const Int& v : *divs)
      for (const Int& b : {v, Int(-v)}) {
        const Int e = p0 / b;
        // a + c = p3, a*c = p2 - b - e, a*e + b*c = p1
        const Int s2 = p3 * p3 - 4 * (p2 - b - e);
        Int s;
        if (!is_perfect_square(s2, &s)) continue;
        for (const Int& a2 : {Int(p3 + s), Int(p3 - s)}) {
          if (mod_reduce(a2, 2) != 0) continue;
          const Int a = a2 / 2, c = p3 - a;
          if (a * e + b * c == p1)
            return {IrreducibilityStatus::reducible, ZPoly({b, a, Int(1)})};
        }
      }
    return {IrreducibilityStatus::irreducible, std::nullopt};
  }

  for (const int sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29})
    if (detail::rabin_irreducible_mod_p(p, Int(sp)))
      return {IrreducibilityStatus::irreducible, std::nullopt};

  // Bounded search for a monic factor of degree k <= n/2 inside a Mignotte
  // box; factors of degree 1 were already excluded by the root test.
  Int norm2 = 0;
  for (const auto& c : p.coeffs()) norm2 += c * c;
  bool complete = roots_complete;
  for (int k = 2; k <= n / 2; ++k) {
    const Int bound = pow_int(2, static_cast<unsigned>(k)) * (isqrt(norm2) + 1);
    const Int box = 2 * bound + 1;
    const Int count = pow_int(box, static_cast<unsigned>(k));
    if (count > caps.enumeration) {
      complete = false;
      continue;
    }
    const std::uint64_t total = count.convert_to<std::uint64_t>();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<Int> c(static_cast<std::size_t>(k) + 1, Int(0));
      Int rest = idx;
      for (int i = 0; i < k; ++i) {
        c[static_cast<std::size_t>(i)] = rest % box - bound;
        rest /= box;
      }
      c.back() = 1;
      const ZPoly candidate(std::move(c));
      if (divmod_monic(p, candidate).second.is_zero())
        return {IrreducibilityStatus::reducible, candidate};
    }
  }
  return complete ? IrreducibilityOutcome{IrreducibilityStatus::irreducible, std::nullopt}
                  : IrreducibilityOutcome{IrreducibilityStatus::unknown, std::nullopt};
}

// An algebraic integer, represented by its monic irreducible minimal
// polynomial over Z. Conjugate roots share the representation, so every
// predicate downstream is Galois-invariant by construction.
class AlgebraicInteger {
 public:
  static AlgebraicInteger make(ZPoly minpoly, const Caps& caps = {}) {
    if (minpoly.is_zero() || !minpoly.is_monic() || minpoly.degree() < 1)
      throw NonMonic("AlgebraicInteger: minimal polynomial must be monic of degree >= 1");
    auto outcome = certify_irreducibility(minpoly, caps);
    if (outcome.status == IrreducibilityStatus::reducible) throw Reducible(*outcome.factor);
    if (outcome.status == IrreducibilityStatus::unknown)
      throw IrreducibilityUnknown("AlgebraicInteger: could not certify irreducibility");
    return AlgebraicInteger(std::move(minpoly));
  }

  const ZPoly& minpoly() const { return p_; }
  int degree() const { return p_.degree(); }

  friend bool operator==(const AlgebraicInteger& a, const AlgebraicInteger& b) {
    return a.p_ == b.p_;
  }

 private:
  explicit AlgebraicInteger(ZPoly p) : p_(std::move(p)) {}
  ZPoly p_;
};

inline AlgebraicInteger mk_algebraic_integer(ZPoly p, const Caps& caps = {}) {
  return AlgebraicInteger::make(std::move(p), caps);
}

// Q(sqrt(D)) for squarefree D != 0, 1, with the standard integral basis
// {1, w}: w = (1 + sqrt(D))/2 when D = 1 mod 4, w = sqrt(D) otherwise.
class QuadraticField {
 public:
  static QuadraticField make(Int D) {
    if (D == 0 || D == 1) throw DomainError("QuadraticField: D must not be 0 or 1");
    const auto split = squarefree_split(D);
    if (split.square_root != 1) throw DomainError("QuadraticField: D must be squarefree");
    return QuadraticField(std::move(D));
  }

  const Int& D() const { return D_; }
  bool is_one_mod_four() const { return mod_reduce(D_, 4) == 1; }
  Int disc() const { return is_one_mod_four() ? D_ : 4 * D_; }
  Int trace_omega() const { return is_one_mod_four() ? 1 : 0; }
  Int norm_omega() const { return is_one_mod_four() ? Int(-(D_ - 1) / 4) : Int(-D_); }
  ZPoly omega_minpoly() const { return ZPoly({norm_omega(), -trace_omega(), Int(1)}); }

  friend bool operator==(const QuadraticField& a, const QuadraticField& b) { return a.D_ == b.D_; }

 private:
  explicit QuadraticField(Int D) : D_(std::move(D)) {}
  Int D_;
};

// Minimal polynomial of s + t*w in O_K (t != 0): X^2 - Tr X + N.
inline ZPoly element_minpoly(const QuadraticField& k, const Int& s, const Int& t) {
  assert(t != 0);
  const Int tr = 2 * s + t * k.trace_omega();
  const Int nm = s * s + s * t * k.trace_omega() + t * t * k.norm_omega();
  return ZPoly({nm, -tr, Int(1)});
}

// The finite quotient O_K/dO_K, elements written a + b*w with residues mod d.
class OkResidueRing {
 public:
  struct Elem {
    Int a, b;
    friend bool operator==(const Elem&, const Elem&) = default;
  };

  OkResidueRing(QuadraticField field, Int d) : k_(std::move(field)), d_(std::move(d)) {
    assert(d_ >= 2);
  }

  const QuadraticField& field() const { return k_; }
  const Int& modulus() const { return d_; }

  Elem make(const Int& a, const Int& b) const { return {mod_reduce(a, d_), mod_reduce(b, d_)}; }
  Elem from_int(const Int& a) const { return make(a, 0); }
  bool is_zero(const Elem& e) const { return e.a == 0 && e.b == 0; }

  Elem add(const Elem& x, const Elem& y) const { return make(x.a + y.a, x.b + y.b); }
  Elem mul(const Elem& x, const Elem& y) const {
    // w^2 = w + (D-1)/4 when D = 1 mod 4, else w^2 = D
    const Int cross = x.a * y.b + x.b * y.a;
    if (k_.is_one_mod_four()) {
      const Int w2_rat = (k_.D() - 1) / 4;
      return make(x.a * y.a + x.b * y.b * w2_rat, cross + x.b * y.b);
    }
    return make(x.a * y.a + x.b * y.b * k_.D(), cross);
  }

  Elem eval(const ZPoly& g, const Elem& beta) const {
    Elem acc = from_int(0);
    for (int i = g.is_zero() ? -1 : g.degree(); i >= 0; --i)
      acc = add(mul(acc, beta), from_int(g.coeff(i)));
    return acc;
  }

 private:
  QuadraticField k_;
  Int d_;
};

// Writes a quadratic algebraic integer in the integral basis of its field:
// alpha = s + t*w with t > 0; [O_K : Z[alpha]] equals t.
struct QuadraticOrderData {
  QuadraticField field;
  Int s, t;
  Int index;
};

inline QuadraticOrderData quadratic_order_data(const AlgebraicInteger& alpha) {
  if (alpha.degree() != 2)
    throw DomainError("quadratic_order_data: alpha must be quadratic");
  const Int b = alpha.minpoly().coeff(1), c = alpha.minpoly().coeff(0);
  const Int disc = b * b - 4 * c;
  const auto split = squarefree_split(disc);
  const Int m = split.square_root;
  QuadraticField field = QuadraticField::make(split.squarefree);
  Int s, t;
  if (field.is_one_mod_four()) {
    assert(mod_reduce(b + m, 2) == 0);
    t = m;
    s = -(b + m) / 2;
  } else {
    assert(mod_reduce(m, 2) == 0 && mod_reduce(b, 2) == 0);
    t = m / 2;
    s = -b / 2;
  }
  assert(element_minpoly(field, s, t) == alpha.minpoly());
  return {std::move(field), std::move(s), t, t};
}

inline Int index_of_order(const AlgebraicInteger& alpha) {
  return quadratic_order_data(alpha).index;
}

// R_alpha = { f : f(alpha) in Z[alpha] } = Int(M_n^{p_alpha}(Z)).
inline MembershipVerdict in_R_alpha(const IvpCandidate& f, const AlgebraicInteger& alpha) {
  return is_int_valued_on_Mnp(f, alpha.minpoly());
}

// Characteristic polynomial of f(C_{p_alpha}) over Q: the product of
// X - f(alpha_i) over the conjugates, monic of degree deg(p_alpha).
inline QPoly value_charpoly(const IvpCandidate& f, const AlgebraicInteger& alpha) {
  const ZPoly r = divmod_monic(f.num(), alpha.minpoly()).second;
  std::vector<Rat> coeffs;
  coeffs.reserve(r.coeffs().size());
  for (const auto& v : r.coeffs()) coeffs.push_back(make_rat(v, f.den()));
  const QMat m = mat_poly_eval(QPoly(std::move(coeffs)), to_qmat(companion(alpha.minpoly())));
  return charpoly(m);
}

// S_alpha = { f : f(alpha) integral }: f(alpha) is an algebraic integer iff
// all elementary symmetric functions of its conjugates are integers, i.e.
// iff the charpoly of f(C_{p_alpha}) has integer coefficients.
inline MembershipVerdict in_S_alpha(const IvpCandidate& f, const AlgebraicInteger& alpha) {
  QPoly cp = value_charpoly(f, alpha);
  if (has_integer_coeffs(cp)) return MembershipVerdict::yes();
  return MembershipVerdict::no(WitnessNonIntegralCharpoly{std::move(cp)});
}

// f in Int_Q(O_K): g(beta) = 0 in O_K/dO_K for all d^2 residues beta.
// Witness: the first failing beta = a + b*w in (a, b)-lexicographic order.
inline MembershipVerdict in_IntQ_OK(const IvpCandidate& f, const QuadraticField& k,
                                    const Caps& caps = {}, unsigned jobs = 1) {
  if (f.is_integer_poly()) return MembershipVerdict::yes();
  const Int& d = f.den();
  const Int total_count = d * d;
  if (total_count > caps.enumeration)
    throw ResourceLimit("in_IntQ_OK: d^2 exceeds enumeration cap");
  const std::uint64_t total = total_count.convert_to<std::uint64_t>();
  const OkResidueRing ring(k, d);
  const std::uint64_t du = d.convert_to<std::uint64_t>();
  auto vanishes = [&](std::uint64_t idx) {
    const OkResidueRing::Elem beta = ring.make(Int(idx / du), Int(idx % du));
    return ring.is_zero(ring.eval(f.num(), beta));
  };
  if (auto bad = first_failing_index(total, jobs, vanishes))
    return MembershipVerdict::no(WitnessOkResidue{Int(*bad / du), Int(*bad % du)});
  return MembershipVerdict::yes();
}

// For beta = x + y*w in O_K and quadratic alpha of index c, produces
// f = g/c with g integer of degree < 2 and f(alpha) = beta exactly.
inline IvpCandidate preimage_under_eval(const Int& x, const Int& y, const AlgebraicInteger& alpha) {
  const QuadraticOrderData data = quadratic_order_data(alpha);
  // c*beta lies in Z[alpha]: c*beta = g0 + g1*alpha with g1 = c*y/t = y.
  const Int g1 = y;
  const Int g0 = data.index * x - g1 * data.s;
  return IvpCandidate::make(ZPoly({g0, g1}), data.index);
}

// Exact coordinates of f(alpha) in the power basis {1, alpha, ..., alpha^(n-1)}.
inline std::vector<Rat> eval_at_alpha(const IvpCandidate& f, const AlgebraicInteger& alpha) {
  const int n = alpha.degree();
  const ZPoly r = divmod_monic(f.num(), alpha.minpoly()).second;
  std::vector<Rat> coords(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) coords[static_cast<std::size_t>(i)] = make_rat(r.coeff(i), f.den());
  return coords;
}

// Monic integralizing polynomial for f in S_alpha: the product of the
// canonical lifts (coefficients in [0, D^2)) of every monic degree-n
// polynomial mod D^2, where D = den^(n-1). Composing it with f lands in
// R_alpha, witnessing that f is integral over R_alpha.
inline ZPoly integralizer(const IvpCandidate& f, const AlgebraicInteger& alpha,
                          const Caps& caps = {}) {
  if (!in_S_alpha(f, alpha).member)
    throw NotInS("integralizer: f is not in S_alpha");
  const int n = alpha.degree();
  if (f.is_integer_poly()) return ZPoly::monomial(n);
  const Int big_d = pow_int(f.den(), static_cast<unsigned>(n - 1));
  const Int modulus = big_d * big_d;
  MonicResiduePolyStream stream(n, modulus);
  if (Int(n) * stream.total() > caps.degree)
    throw ResourceLimit("integralizer: n*(D^2)^n exceeds degree cap");
  const std::uint64_t total = stream.total().convert_to<std::uint64_t>();
  ZPoly phi = ZPoly::constant(Int(1));
  for (std::uint64_t k = 0; k < total; ++k) phi = phi * stream.at(k).lift();
  return phi;
}

// Conductor pullback membership for quadratic alpha: f(alpha) must land in
// c*O_K, the conductor of Z[alpha] in O_K, where c is the index.
inline MembershipVerdict in_conductor(const IvpCandidate& f, const AlgebraicInteger& alpha) {
  const QuadraticOrderData data = quadratic_order_data(alpha);
  const MembershipVerdict r = in_R_alpha(f, alpha);
  if (!r.member) return r;
  const std::vector<Rat> coords = eval_at_alpha(f, alpha);
  assert(is_integer(coords[0]) && is_integer(coords[1]));
  const Int u = numerator(coords[0]), v = numerator(coords[1]);
  const Int x = u + v * data.s;  // f(alpha) = x + y*w
  const Int y = v * data.t;
  if (x % data.index != 0 || y % data.index != 0)
    return MembershipVerdict::no(WitnessConductorCoords{x, y, data.index});
  return MembershipVerdict::yes();
}

}  // namespace ivp
