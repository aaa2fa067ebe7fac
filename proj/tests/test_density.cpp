#include <catch_amalgamated.hpp>

#include "ivp/density.hpp"
#include "ivp/parse.hpp"
#include "ivp/rng.hpp"

using namespace ivp;

namespace {

// generated member of Int(M_2(Z)) with seeded noise: (G*h + d*e)/d
IvpCandidate seeded_member(Rng& rng, const Int& d) {
  const IvpCandidate base = generate_int_MnZ(2, d);
  std::vector<Int> hc(static_cast<std::size_t>(rng.uniform(0, 2).convert_to<int>()) + 1);
  for (auto& v : hc) v = rng.uniform(-9, 9);
  std::vector<Int> ec(static_cast<std::size_t>(rng.uniform(0, 4).convert_to<int>()) + 1);
  for (auto& v : ec) v = rng.uniform(-9, 9);
  return IvpCandidate::make(base.num() * ZPoly(std::move(hc)) + d * ZPoly(std::move(ec)), d);
}

std::vector<Int> squarefree_up_to(long long bound) {
  std::vector<Int> out;
  for (long long v = -bound; v <= bound; ++v) {
    if (v == 0 || v == 1) continue;
    if (squarefree_split(Int(v)).square_root == 1) out.push_back(Int(v));
  }
  return out;
}

}  // namespace

TEST_CASE("degree of an element of Z[theta]") {
  CHECK(degree_of_element(parse_zpoly("x"), parse_zpoly("x^3-2")) == 3);
  CHECK(degree_of_element(parse_zpoly("5"), parse_zpoly("x^3-2")) == 1);
  CHECK(degree_of_element(parse_zpoly("x^2"), parse_zpoly("x^4-2")) == 2);
  CHECK(degree_of_element(parse_zpoly("x+1"), parse_zpoly("x^2-2")) == 2);
  CHECK(degree_of_element(parse_zpoly("2x"), parse_zpoly("x^2-8")) == 2);
}

TEST_CASE("coverage by degree-n elements") {
  const CoverageReport r = coverage_by_degree_n(parse_zpoly("x^2-2"), 2);
  CHECK(r.classes.size() == 4);
  CHECK(r.not_found_count() == 0);
  for (const auto& cls : r.classes) {
    REQUIRE(cls.representative.has_value());
    // representative stays in the class and has full degree
    const auto& rep = *cls.representative;
    for (std::size_t i = 0; i < rep.size(); ++i)
      CHECK(mod_reduce(rep[i], 2) == cls.residue_class[i]);
    CHECK(degree_of_element(ZPoly(rep), parse_zpoly("x^2-2")) == 2);
    // classes whose canonical lift is a rational constant need a bump,
    // everything else lifts directly
    const bool constant_class = cls.residue_class[1] == 0;
    CHECK(*cls.k == (constant_class ? 1 : 0));
  }

  const CoverageReport r3 = coverage_by_degree_n(parse_zpoly("x^2-x-1"), 3);
  CHECK(r3.classes.size() == 9);
  CHECK(r3.not_found_count() == 0);
  for (const auto& cls : r3.classes) CHECK(*cls.k <= 1);

  const CoverageReport r1 = coverage_by_degree_n(parse_zpoly("x-4"), 3);
  CHECK(r1.classes.size() == 3);
  CHECK(r1.not_found_count() == 0);
  for (const auto& cls : r1.classes) CHECK(*cls.k == 0);

  const CoverageReport rc = coverage_by_degree_n(parse_zpoly("x^3-2"), 2);
  CHECK(rc.classes.size() == 8);
  CHECK(rc.not_found_count() == 0);
  for (const auto& cls : rc.classes) {
    CHECK(degree_of_element(ZPoly(*cls.representative), parse_zpoly("x^3-2")) == 3);
    CHECK(*cls.k <= 9);
  }
}

TEST_CASE("coverage avoiding the order generators") {
  const CoverageReport r = coverage_excluding_generators(parse_zpoly("x^2-2"), 2);
  CHECK(r.not_found_count() == 0);
  for (const auto& cls : r.classes) {
    const auto& rep = *cls.representative;
    CHECK(rep[1] != 1);
    CHECK(rep[1] != -1);
    CHECK(degree_of_element(ZPoly(rep), parse_zpoly("x^2-2")) == 2);
    // the class of theta itself must skip theta and land on 3*theta
    if (cls.residue_class[0] == 0 && cls.residue_class[1] == 1) {
      CHECK(*cls.k == 1);
      CHECK(rep[1] == 3);
    }
    // constant classes pick up a theta part of size d
    if (cls.residue_class[1] == 0) CHECK(rep[1] == 2);
  }

  const CoverageReport r5 = coverage_excluding_generators(parse_zpoly("x^2-x-1"), 5);
  CHECK(r5.classes.size() == 25);
  CHECK(r5.not_found_count() == 0);

  CHECK_THROWS_AS(coverage_excluding_generators(parse_zpoly("x^3-2"), 2), DomainError);
}

TEST_CASE("sandwich: members of Int(M_2(Z)) lie inside every Int_Q(O_K)") {
  Rng rng(89);
  const std::vector<Int> fields = squarefree_up_to(20);
  REQUIRE(!fields.empty());

  for (int iter = 0; iter < 10; ++iter) {
    const Int d = iter % 2 == 0 ? 2 : 3;
    const SandwichReport r = sandwich_check(seeded_member(rng, d), 2, fields);
    CHECK(r.lower.member);
    CHECK(r.consistent);
    for (const auto& [D, verdict] : r.upper) CHECK(verdict.member);
  }

  // a non-member of Int(Z) fails lower and the inert field catches it
  const SandwichReport bad = sandwich_check(parse_candidate("x*(x-1)/2"), 2, fields);
  CHECK_FALSE(bad.lower.member);
  CHECK(bad.consistent);
  for (const auto& [D, verdict] : bad.upper)
    if (D == 5) CHECK_FALSE(verdict.member);

  const SandwichReport trivial = sandwich_check(parse_candidate("x^4-x"), 2, fields);
  CHECK(trivial.lower.member);
  for (const auto& [D, verdict] : trivial.upper) CHECK(verdict.member);
}

TEST_CASE("degree-2 falsifier comes back empty") {
  FalsifierSpace space;
  space.samples_per_denominator = 300;  // trimmed for the unit suite
  const FalsifierReport r = theorem2_falsifier(space, 1);
  CHECK(r.candidates_tested == 600);
  CHECK(r.alpha_sample_size > 300);
  CHECK(r.survivors.empty());

  // the classic non-member is eliminated by the golden-ratio integer
  const AlgebraicInteger golden = mk_algebraic_integer(parse_zpoly("x^2-x-1"));
  CHECK_FALSE(in_S_alpha(parse_candidate("x*(x-1)/2"), golden).member);

  FalsifierSpace degenerate;
  degenerate.denominators = {Int(1)};
  degenerate.samples_per_denominator = 5;
  CHECK(theorem2_falsifier(degenerate, 1).survivors.empty());
}

TEST_CASE("falsifier is deterministic for a fixed seed") {
  FalsifierSpace space;
  space.samples_per_denominator = 50;
  const FalsifierReport a = theorem2_falsifier(space, 7);
  const FalsifierReport b = theorem2_falsifier(space, 7);
  CHECK(a.candidates_tested == b.candidates_tested);
  CHECK(a.survivors.size() == b.survivors.size());
}
