#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ivp/algint.hpp"
#include "ivp/candidate.hpp"
#include "ivp/errors.hpp"
#include "ivp/membership.hpp"
#include "ivp/poly.hpp"
#include "ivp/rng.hpp"
#include "ivp/verdict.hpp"

namespace ivp {

// Degree of the minimal polynomial of g(theta) in Z[theta] = Z[X]/(p):
// the Q-rank of {1, g, g^2, ..., g^(n-1)} reduced mod p.
inline int degree_of_element(const ZPoly& g, const ZPoly& p) {
  if (p.is_zero() || !p.is_monic() || p.degree() < 1)
    throw NonMonic("degree_of_element: p must be monic of degree >= 1");
  const int n = p.degree();
  std::vector<std::vector<Rat>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  ZPoly power = ZPoly::constant(Int(1));
  for (int k = 0; k < n; ++k) {
    std::vector<Rat> row(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = Rat(power.coeff(i));
    rows.push_back(std::move(row));
    if (k + 1 < n) power = divmod_monic(power * g, p).second;
  }
  // rank over Q by Gaussian elimination
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int i = rank; i < n; ++i)
      if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    const Rat lead = rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
    for (int i = rank + 1; i < n; ++i) {
      const Rat factor = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] / lead;
      if (factor == 0) continue;
      for (int j = col; j < n; ++j)
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            factor * rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
    }
    ++rank;
  }
  return rank;
}

// Per-residue-class search results for the degree-n coverage experiments.
struct CoverageClassResult {
  std::vector<Int> residue_class;        // coordinates mod d in the power basis
  std::optional<std::vector<Int>> representative;  // lifted coordinates, when found
  std::optional<int> k;                  // search parameter of the successful lift
};

struct CoverageReport {
  ZPoly order_minpoly;
  Int modulus;
  bool exclude_generators = false;
  int k_bound = 0;
  std::vector<CoverageClassResult> classes;

  int not_found_count() const {
    int c = 0;
    for (const auto& r : classes)
      if (!r.representative) ++c;
    return c;
  }
};

namespace detail {

inline CoverageReport coverage_search(const ZPoly& p, const Int& d, int k_bound,
                                      bool exclude_generators, const Caps& caps) {
  if (p.is_zero() || !p.is_monic() || p.degree() < 1)
    throw NonMonic("coverage: order polynomial must be monic of degree >= 1");
  if (exclude_generators && p.degree() != 2)
    throw DomainError("coverage: generator exclusion only applies to quadratic orders");
  const int n = p.degree();
  const Int class_count = pow_int(d, static_cast<unsigned>(n));
  if (class_count > caps.enumeration)
    throw ResourceLimit("coverage: d^n exceeds enumeration cap");
  const std::uint64_t total = class_count.convert_to<std::uint64_t>();

  CoverageReport report{p, d, exclude_generators, k_bound, {}};
  report.classes.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Int> cls(static_cast<std::size_t>(n));
    Int rest = idx;
    for (int i = 0; i < n; ++i) {
      cls[static_cast<std::size_t>(i)] = rest % d;
      rest /= d;
    }
    CoverageClassResult result{cls, std::nullopt, std::nullopt};
    // gamma = alpha0 + k*(d*theta): d*theta has full degree and lies in dO,
    // so every attempt stays inside the residue class.
    for (int k = 0; k <= k_bound; ++k) {
      std::vector<Int> coords = cls;
      if (n > 1) coords[1] += Int(k) * d;
      const ZPoly gamma(coords);
      if (degree_of_element(gamma, p) != n) continue;
      if (exclude_generators) {
        const Int& b = coords[1];
        if (b == 1 || b == -1) continue;  // Z[gamma] would be the whole order
      }
      result.representative = std::move(coords);
      result.k = k;
      break;
    }
    report.classes.push_back(std::move(result));
  }
  return report;
}

}  // namespace detail

// Every residue class mod dO of the monogenic order O = Z[theta] should
// contain an element of full degree n; searches gamma = alpha0 + k*d*theta.
inline CoverageReport coverage_by_degree_n(const ZPoly& p, const Int& d, int k_bound = -1,
                                           const Caps& caps = {}) {
  const int n = p.is_zero() ? 0 : p.degree();
  if (k_bound < 0) k_bound = n * n;
  return detail::coverage_search(p, d, k_bound, false, caps);
}

// Same search, but representatives additionally avoid the generators of the
// order: for quadratic Z[theta] those are exactly the elements with theta
// coordinate +-1.
inline CoverageReport coverage_excluding_generators(const ZPoly& p, const Int& d, int k_bound = -1,
                                                    const Caps& caps = {}) {
  const int n = p.is_zero() ? 0 : p.degree();
  if (k_bound < 0) k_bound = n * n;
  return detail::coverage_search(p, d, k_bound, true, caps);
}

// Lower ring membership against a family of upper rings: a member of
// Int(M_n(Z)) must be a member of Int_Q(O_K) for every field in the family.
struct SandwichReport {
  IvpCandidate candidate;
  MembershipVerdict lower;
  std::vector<std::pair<Int, MembershipVerdict>> upper;  // (D, verdict)
  bool consistent = true;
};

inline SandwichReport sandwich_check(const IvpCandidate& f, int n, const std::vector<Int>& fields,
                                     const Caps& caps = {}, unsigned jobs = 1) {
  if (fields.empty()) throw DomainError("sandwich_check: field family must be nonempty");
  SandwichReport report{f, is_int_valued_on_MnZ(f, n, caps, jobs), {}, true};
  report.upper.reserve(fields.size());
  for (const Int& D : fields) {
    MembershipVerdict upper = in_IntQ_OK(f, QuadraticField::make(D), caps, jobs);
    if (report.lower.member && !upper.member) report.consistent = false;
    report.upper.emplace_back(D, std::move(upper));
  }
  return report;
}

// Search space for the degree-2 falsification harness: seeded random
// candidates g/den with bounded degree and coefficients, screened against
// every irreducible monic quadratic with coefficients in the alpha box.
struct FalsifierSpace {
  std::vector<Int> denominators{Int(2), Int(3)};
  int max_degree = 8;
  long long coeff_bound = 6;
  long long alpha_coeff_bound = 10;
  std::uint64_t samples_per_denominator = 2000;
};

struct FalsifierReport {
  FalsifierSpace space;
  std::uint64_t seed = 0;
  std::uint64_t candidates_tested = 0;
  std::size_t alpha_sample_size = 0;
  // Candidates integral on every sampled alpha yet outside Int(Z); the
  // underlying density statement predicts this stays empty.
  std::vector<IvpCandidate> survivors;
};

inline std::vector<ZPoly> quadratic_alpha_sample(long long coeff_bound) {
  std::vector<ZPoly> sample;
  for (long long b = -coeff_bound; b <= coeff_bound; ++b)
    for (long long c = -coeff_bound; c <= coeff_bound; ++c) {
      const Int disc = Int(b) * b - 4 * Int(c);
      if (disc >= 0 && is_perfect_square(disc)) continue;  // reducible over Q
      sample.push_back(ZPoly({Int(c), Int(b), Int(1)}));
    }
  return sample;
}

inline FalsifierReport theorem2_falsifier(const FalsifierSpace& space = {},
                                          std::uint64_t seed = 1) {
  FalsifierReport report{space, seed, 0, 0, {}};
  const std::vector<ZPoly> alphas = quadratic_alpha_sample(space.alpha_coeff_bound);
  report.alpha_sample_size = alphas.size();
  std::vector<AlgebraicInteger> sample;
  sample.reserve(alphas.size());
  for (const auto& p : alphas) sample.push_back(AlgebraicInteger::make(p));

  Rng rng(seed);
  for (const Int& den : space.denominators) {
    for (std::uint64_t i = 0; i < space.samples_per_denominator; ++i) {
      // resample until the content is coprime to den, keeping the fraction in
      // the requested canonical form g/den
      IvpCandidate f;
      for (;;) {
        std::vector<Int> c(static_cast<std::size_t>(space.max_degree) + 1);
        for (auto& v : c) v = rng.uniform(-space.coeff_bound, space.coeff_bound);
        ZPoly g{std::move(c)};
        if (g.is_zero()) continue;
        if (boost::multiprecision::gcd(content(g), den) != 1) continue;
        f = IvpCandidate::make(std::move(g), den);
        break;
      }
      ++report.candidates_tested;
      if (is_int_valued_on_Z(f).member) continue;  // no counterexample here
      bool eliminated = false;
      for (const auto& alpha : sample)
        if (!in_S_alpha(f, alpha).member) {
          eliminated = true;
          break;
        }
      if (!eliminated) report.survivors.push_back(f);
    }
  }
  return report;
}

}  // namespace ivp
