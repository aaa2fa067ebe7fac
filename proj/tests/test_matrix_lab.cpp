#include <catch_amalgamated.hpp>

#include "ivp/matrix_lab.hpp"
#include "ivp/parse.hpp"
#include "ivp/rng.hpp"

using namespace ivp;

namespace {

IvpCandidate random_fraction(Rng& rng, const Int& den, int max_deg, long long bound) {
  std::vector<Int> c(static_cast<std::size_t>(rng.uniform(0, max_deg).convert_to<int>()) + 1);
  for (auto& v : c) v = rng.uniform(-bound, bound);
  return IvpCandidate::make(ZPoly(std::move(c)), den);
}

}  // namespace

TEST_CASE("exhaustive oracle") {
  CHECK(oracle_int_MnZ(generate_int_MnZ(2, 2), 2).member);
  CHECK(oracle_int_MnZ(parse_candidate("x^3-x+4"), 2).member);  // den = 1

  const auto bad = oracle_int_MnZ(parse_candidate("x*(x-1)/2"), 2);
  REQUIRE_FALSE(bad.member);
  const ModMat w = std::get<WitnessResidueMatrix>(*bad.witness).mat;
  CHECK_FALSE(mat_poly_eval(ModPoly::reduce(parse_zpoly("x^2-x"), 2), w).is_zero());

  Caps tiny;
  tiny.matrix_enumeration = 10;
  CHECK_THROWS_AS(oracle_int_MnZ(parse_candidate("x/2"), 2, tiny), ResourceLimit);
}

TEST_CASE("matrix class stream") {
  // trace 1, det 1 matrices mod 2 = class of x^2+x+1
  auto stream = enumerate_with_charpoly(parse_zpoly("x^2+x+1"), 2);
  std::vector<ModMat> found;
  while (auto m = stream.next()) found.push_back(*m);
  std::uint64_t direct = 0;
  for (std::uint64_t k = 0; k < 16; ++k) {
    const ModMat m = MatrixClassStream::matrix_at(k, 2, 2);
    const Int tr = mod_reduce(m(0, 0) + m(1, 1), 2);
    const Int det = mod_reduce(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0), 2);
    if (tr == 1 && det == 1) ++direct;
  }
  CHECK(found.size() == direct);
  for (const auto& m : found) CHECK(charpoly(m) == ModPoly::reduce(parse_zpoly("x^2+x+1"), 2));

  // the companion matrix always belongs to its own class
  const ZPoly p = parse_zpoly("x^2+2x+2");
  auto stream3 = enumerate_with_charpoly(p, 3);
  const ModMat comp = ModMat::reduce(companion(p), 3);
  bool seen = false;
  while (auto m = stream3.next())
    if (*m == comp) seen = true;
  CHECK(seen);

  // n = 1: the only matrix with charpoly x - a is [a]
  auto stream1 = enumerate_with_charpoly(parse_zpoly("x - 7"), 5);
  auto only = stream1.next();
  REQUIRE(only.has_value());
  CHECK((*only)(0, 0) == 2);
  CHECK_FALSE(stream1.next().has_value());
}

TEST_CASE("unfiltered stream hits every matrix exactly once") {
  MatrixClassStream stream(2, 2);
  CHECK(stream.total_space() == 16);
  std::vector<ModMat> seen;
  while (auto m = stream.next()) {
    for (const auto& prev : seen) CHECK_FALSE(prev == *m);
    seen.push_back(*m);
  }
  CHECK(seen.size() == 16);

  Caps tiny;
  tiny.matrix_enumeration = 8;
  CHECK_THROWS_AS(MatrixClassStream(2, 2, std::nullopt, tiny), ResourceLimit);
}

TEST_CASE("null ideal spans") {
  // companion matrix: the span up to deg(p) is generated by p itself
  const ZPoly p = parse_zpoly("x^2+x+1");
  const NullIdealSpan s = null_ideal_span(ModMat::reduce(companion(p), 2), 2);
  REQUIRE(s.generators.size() == 1);
  CHECK(s.generators[0] == ModPoly::reduce(p, 2));

  // zero matrix, bound 1: only x
  const NullIdealSpan z = null_ideal_span(ModMat(2, Int(4)), 1);
  REQUIRE(z.generators.size() == 1);
  CHECK(z.generators[0] == ModPoly(4, {Int(0), Int(1)}));

  // identity mod 2, bound 1: x + 1
  const NullIdealSpan i = null_ideal_span(ModMat::identity(2, 2), 1);
  REQUIRE(i.generators.size() == 1);
  CHECK(i.generators[0] == ModPoly(2, {Int(1), Int(1)}));

  // bound 0: no nonzero constant annihilates a matrix mod d >= 2
  CHECK(null_ideal_span(ModMat(2, Int(6)), 0).generators.empty());
}

TEST_CASE("null ideal span contains the charpoly once the bound admits it") {
  Rng rng(53);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = rng.uniform(1, 3).convert_to<int>();
    const Int d = rng.uniform(2, 6);
    Mat<Int> m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rng.uniform(0, 10);
    const ModMat mm(d, std::move(m));
    const NullIdealSpan span = null_ideal_span(mm, n + 1);
    const ModPoly cp = charpoly(mm);
    std::vector<Int> v(static_cast<std::size_t>(n + 2), Int(0));
    for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = cp.coeff(i);
    IntRows gens;
    for (const auto& g : span.generators) {
      std::vector<Int> gv(static_cast<std::size_t>(n + 2), Int(0));
      if (!g.is_zero())
        for (int i = 0; i <= g.degree(); ++i) gv[static_cast<std::size_t>(i)] = g.coeff(i);
      gens.push_back(std::move(gv));
    }
    CHECK(in_span_mod_d(gens, v, n + 2, d));
  }
}

TEST_CASE("intersection of null ideals is the principal span of p") {
  CHECK(intersect_null_ideals(parse_zpoly("x^2+x+1"), 2, 6).generators ==
        principal_span(parse_zpoly("x^2+x+1"), 2, 6).generators);
  CHECK(intersect_null_ideals(parse_zpoly("x^2"), 3, 4).generators ==
        principal_span(parse_zpoly("x^2"), 3, 4).generators);
  CHECK(intersect_null_ideals(parse_zpoly("x^2+1"), 2, 1).generators.empty());
}

TEST_CASE("class-wide annihilation matches companion-only annihilation") {
  Rng rng(59);
  for (const long long dv : {2LL, 3LL}) {
    const Int d(dv);
    for (std::uint64_t pk = 0; pk < static_cast<std::uint64_t>(dv * dv); ++pk) {
      const ModPoly pbar = MonicResiduePolyStream(2, d).at(pk);
      const ZPoly p = pbar.lift();
      const ModMat comp = ModMat::reduce(companion(p), d);
      for (int iter = 0; iter < 25; ++iter) {
        const IvpCandidate f = random_fraction(rng, d, 8, 9);
        if (f.is_integer_poly()) continue;  // member on both routes
        const ModPoly g = ModPoly::reduce(f.num(), f.den());
        const bool on_companion = mat_poly_eval(g, comp).is_zero();
        bool on_class = true;
        auto stream = enumerate_with_charpoly(p, d);
        while (auto m = stream.next())
          if (!mat_poly_eval(g, *m).is_zero()) {
            on_class = false;
            break;
          }
        CHECK(on_class == on_companion);
      }
    }
  }
}

TEST_CASE("image in the subalgebra") {
  const ZPoly p = parse_zpoly("x^2 - 8");

  // integer polynomials land on their remainder coefficients
  const auto integer_image = image_in_subalgebra(parse_candidate("x^3 + x"), p);
  REQUIRE(integer_image.has_value());
  CHECK(*integer_image == std::vector<Int>{Int(0), Int(9)});  // x^3 + x = x*p + 9x

  // Cayley-Hamilton kills the numerator
  const auto killed = image_in_subalgebra(parse_candidate("(x^2-8)/2"), p);
  REQUIRE(killed.has_value());
  CHECK(*killed == std::vector<Int>{Int(0), Int(0)});

  CHECK_FALSE(image_in_subalgebra(parse_candidate("x/2"), p).has_value());
}

TEST_CASE("image succeeds exactly on Mnp members and reproduces f(C_p)") {
  Rng rng(61);
  for (int iter = 0; iter < 200; ++iter) {
    const Int den = rng.uniform(1, 4);
    const IvpCandidate f = random_fraction(rng, den, 7, 9);
    const int n = rng.uniform(1, 3).convert_to<int>();
    std::vector<Int> pc(static_cast<std::size_t>(n) + 1);
    for (auto& v : pc) v = rng.uniform(-5, 5);
    pc.back() = 1;
    const ZPoly p(std::move(pc));
    const auto image = image_in_subalgebra(f, p);
    CHECK(image.has_value() == is_int_valued_on_Mnp(f, p).member);
    if (!image) continue;
    const QMat c = to_qmat(companion(p));
    QMat recon(n);
    QMat power = QMat::identity(n);
    for (int i = 0; i < n; ++i) {
      recon = recon + Rat((*image)[static_cast<std::size_t>(i)]) * power;
      power = power * c;
    }
    CHECK(recon == mat_poly_eval(f.to_qpoly(), c));
  }
}
