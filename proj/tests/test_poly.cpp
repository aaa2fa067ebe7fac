#include <catch_amalgamated.hpp>

#include "ivp/modpoly.hpp"
#include "ivp/poly.hpp"
#include "ivp/rng.hpp"

using namespace ivp;

namespace {

ModPoly random_modpoly(Rng& rng, const Int& d, int max_deg) {
  std::vector<Int> c(static_cast<std::size_t>(rng.uniform(0, max_deg).convert_to<int>()) + 1);
  for (auto& v : c) v = rng.uniform(0, 100);
  return ModPoly(d, std::move(c));
}

ModPoly random_monic(Rng& rng, const Int& d, int deg) {
  std::vector<Int> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = rng.uniform(0, 100);
  c.back() = 1;
  return ModPoly(d, std::move(c));
}

}  // namespace

TEST_CASE("poly basics") {
  const ZPoly z;
  CHECK(z.is_zero());
  CHECK(content(z) == 0);

  const ZPoly f({Int(5), Int(-1), Int(0), Int(3)});
  CHECK(f.degree() == 3);
  CHECK(f.coeff(2) == 0);
  CHECK(f.coeff(7) == 0);
  CHECK(f(Int(2)) == 5 - 2 + 3 * 8);

  // trailing zeros are stripped
  const ZPoly g({Int(1), Int(0), Int(0)});
  CHECK(g.degree() == 0);

  CHECK(content(ZPoly({Int(6), Int(-9), Int(12)})) == 3);
}

TEST_CASE("integer divmod by monic divisor") {
  const ZPoly num({Int(-8), Int(0), Int(1)});  // x^2 - 8
  const ZPoly div({Int(-3), Int(1)});          // x - 3
  auto [q, r] = divmod_monic(num, div);
  CHECK(q * div + r == num);
  CHECK(r.degree() == 0);
  CHECK(r.coeff(0) == 1);  // 9 - 8

  CHECK_THROWS_AS(divmod_monic(num, ZPoly({Int(1), Int(2)})), NonMonicDivisor);
}

TEST_CASE("modular divmod examples") {
  // x^2 = 1*(x^2+1) + 2 over Z/3
  const ModPoly a(3, {Int(0), Int(0), Int(1)});
  const ModPoly m(3, {Int(1), Int(0), Int(1)});
  auto [q, r] = poly_divmod_monic(a, m);
  CHECK(q == ModPoly(3, {Int(1)}));
  CHECK(r == ModPoly(3, {Int(2)}));

  // zero dividend stays zero
  auto [q0, r0] = poly_divmod_monic(ModPoly(3), m);
  CHECK(q0.is_zero());
  CHECK(r0.is_zero());

  // x^3+x = (x+1)(x^2+x+1) + (x+1) over Z/2, verified by re-expansion
  const ModPoly a2(2, {Int(0), Int(1), Int(0), Int(1)});
  const ModPoly m2(2, {Int(1), Int(1), Int(1)});
  auto [q2, r2] = poly_divmod_monic(a2, m2);
  CHECK(q2 == ModPoly(2, {Int(1), Int(1)}));
  CHECK(r2 == ModPoly(2, {Int(1), Int(1)}));
  CHECK(q2 * m2 + r2 == a2);

  CHECK_THROWS_AS(poly_divmod_monic(a, ModPoly(3, {Int(1), Int(2), Int(2)})), NonMonicDivisor);
  CHECK_THROWS_AS(poly_divmod_monic(ModPoly(4, {Int(1)}), m), ModulusMismatch);
}

TEST_CASE("modular divmod round-trips for random inputs, composite moduli included") {
  Rng rng(42);
  for (int iter = 0; iter < 400; ++iter) {
    const Int d = rng.uniform(2, 12);
    const int deg_m = rng.uniform(1, 5).convert_to<int>();
    const ModPoly m = random_monic(rng, d, deg_m);
    const ModPoly a = random_modpoly(rng, d, 9);
    auto [q, r] = poly_divmod_monic(a, m);
    CHECK(q * m + r == a);
    CHECK((r.is_zero() || r.degree() < m.degree()));
  }
}

TEST_CASE("compose") {
  const ZPoly outer({Int(1), Int(0), Int(1)});  // x^2 + 1
  const ZPoly inner({Int(-1), Int(1)});         // x - 1
  CHECK(compose(outer, inner) == ZPoly({Int(2), Int(-2), Int(1)}));
  CHECK(compose(ZPoly(), inner).is_zero());
}
