#include <catch_amalgamated.hpp>

#include "ivp/matrix.hpp"
#include "ivp/parse.hpp"
#include "ivp/rng.hpp"

using namespace ivp;

namespace {

ZPoly random_monic_zpoly(Rng& rng, int deg, long long bound) {
  std::vector<Int> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = rng.uniform(-bound, bound);
  c.back() = 1;
  return ZPoly(std::move(c));
}

ZMat random_zmat(Rng& rng, int n, long long bound) {
  ZMat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.uniform(-bound, bound);
  return m;
}

}  // namespace

TEST_CASE("companion layout") {
  const ZPoly p = parse_zpoly("x^2 - 8");
  const ZMat c = companion(p);
  CHECK(c == parse_zmat("[[0,8],[1,0]]"));

  CHECK(companion(parse_zpoly("x - 3")) == parse_zmat("[[3]]"));

  const ZMat shift = companion(parse_zpoly("x^3"));
  CHECK(charpoly(shift) == parse_zpoly("x^3"));
  CHECK(shift(0, 2) == 0);
  CHECK(shift(1, 0) == 1);
  CHECK(shift(2, 1) == 1);

  CHECK_THROWS_AS(companion(parse_zpoly("2*x^2 - 8")), NonMonic);
}

TEST_CASE("charpoly examples") {
  CHECK(charpoly(companion(parse_zpoly("x^2 - 8"))) == parse_zpoly("x^2 - 8"));
  CHECK(charpoly(ZMat(3)) == parse_zpoly("x^3"));
  CHECK(charpoly(parse_qmat("[[0,4],[1/2,0]]")) ==
        QPoly({Rat(-2), Rat(0), Rat(1)}));
}

TEST_CASE("charpoly of companion inverts for random monic polynomials") {
  Rng rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const int deg = rng.uniform(1, 6).convert_to<int>();
    const ZPoly p = random_monic_zpoly(rng, deg, 9);
    CHECK(charpoly(companion(p)) == p);
  }
}

TEST_CASE("modular charpoly agrees with lift-then-reduce") {
  Rng rng(11);
  for (int iter = 0; iter < 150; ++iter) {
    const int n = rng.uniform(1, 4).convert_to<int>();
    const Int d = rng.uniform(2, 9);
    const ZMat m = random_zmat(rng, n, 40);
    const ZPoly lifted = charpoly(m);  // oracle path: integer charpoly, then reduce
    CHECK(charpoly(ModMat::reduce(m, d)) == ModPoly::reduce(lifted, d));
  }
}

TEST_CASE("Cayley-Hamilton for random integer matrices") {
  Rng rng(13);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = rng.uniform(1, 4).convert_to<int>();
    const ZMat m = random_zmat(rng, n, 9);
    CHECK(mat_poly_eval(charpoly(m), m).is_zero());
  }
}

TEST_CASE("matrix polynomial evaluation") {
  const ZMat m = parse_zmat("[[1,2],[3,4]]");
  CHECK(mat_poly_eval(ZPoly({Int(0), Int(1)}), m) == m);  // g = x

  const ZPoly p = parse_zpoly("x^2 - 8");
  CHECK(mat_poly_eval(p, companion(p)).is_zero());

  // g = x^2 - x on [[0,1],[0,0]] mod 2 equals the matrix itself: M^2 = 0 and
  // -M = M mod 2
  const ModMat nil = ModMat::reduce(parse_zmat("[[0,1],[0,0]]"), 2);
  const ModMat value = mat_poly_eval(ZPoly({Int(0), Int(-1), Int(1)}), nil);
  CHECK_FALSE(value.is_zero());
  CHECK(value == nil);
  // direct 2x2 product as the oracle
  CHECK((nil * nil).is_zero());

  // constant term contributes g0 * I
  const ZMat two_i = mat_poly_eval(ZPoly({Int(2)}), m);
  CHECK(two_i == 2 * ZMat::identity(2));

  CHECK_THROWS_AS(mat_poly_eval(ModPoly(3, {Int(1)}), nil), ModulusMismatch);
}
