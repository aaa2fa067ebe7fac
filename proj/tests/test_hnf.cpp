#include <catch_amalgamated.hpp>

#include "ivp/hnf.hpp"
#include "ivp/rng.hpp"

using namespace ivp;

namespace {

bool maps_to_zero(const IntRows& a, const std::vector<Int>& v, const Int& d) {
  for (const auto& row : a) {
    Int acc = 0;
    for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * v[j];
    if (mod_reduce(acc, d) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("kernel_mod_d examples") {
  // zero map mod 4: everything
  const IntRows zero_map = {{Int(0), Int(0)}};
  CHECK(kernel_mod_d(zero_map, 1, 2, 4) == IntRows{{Int(1), Int(0)}, {Int(0), Int(1)}});

  // identity mod a prime: nothing
  const IntRows ident = {{Int(1), Int(0)}, {Int(0), Int(1)}};
  CHECK(kernel_mod_d(ident, 2, 2, 5).empty());

  // multiplication by 2 mod 4: the residue 2
  const IntRows twice = {{Int(2)}};
  CHECK(kernel_mod_d(twice, 1, 1, 4) == IntRows{{Int(2)}});
}

TEST_CASE("kernel vectors annihilate and span the exhaustive kernel") {
  Rng rng(5);
  for (int iter = 0; iter < 120; ++iter) {
    const Int d = rng.uniform(2, 6);
    const int c = rng.uniform(1, 3).convert_to<int>();
    const int r = rng.uniform(1, 3).convert_to<int>();
    IntRows a(static_cast<std::size_t>(r), std::vector<Int>(static_cast<std::size_t>(c)));
    for (auto& row : a)
      for (auto& v : row) v = rng.uniform(0, 20);

    const IntRows gens = kernel_mod_d(a, r, c, d);
    for (const auto& g : gens) CHECK(maps_to_zero(a, g, d));

    // every kernel vector found by brute force lies in the span
    const std::uint64_t du = d.convert_to<std::uint64_t>();
    std::uint64_t space = 1;
    for (int i = 0; i < c; ++i) space *= du;
    for (std::uint64_t k = 0; k < space; ++k) {
      std::vector<Int> v(static_cast<std::size_t>(c));
      std::uint64_t rest = k;
      for (int i = 0; i < c; ++i) {
        v[static_cast<std::size_t>(i)] = Int(rest % du);
        rest /= du;
      }
      if (maps_to_zero(a, v, d)) CHECK(in_span_mod_d(gens, v, c, d));
    }
  }
}

TEST_CASE("canonical span is deterministic and pivot-normalized") {
  const IntRows gens = {{Int(2), Int(2), Int(0)}, {Int(0), Int(4), Int(2)}};
  const IntRows span1 = canonical_span(gens, 3, 8);
  const IntRows span2 = canonical_span(gens, 3, 8);
  CHECK(span1 == span2);
  for (std::size_t i = 0; i < span1.size(); ++i) {
    // pivot = first nonzero entry; positive, divides the modulus
    std::size_t p = 0;
    while (p < span1[i].size() && span1[i][p] == 0) ++p;
    REQUIRE(p < span1[i].size());
    CHECK(span1[i][p] > 0);
    CHECK(Int(8) % span1[i][p] == 0);
    if (i > 0) {
      std::size_t prev = 0;
      while (prev < span1[i - 1].size() && span1[i - 1][prev] == 0) ++prev;
      CHECK(prev < p);  // sorted by pivot position
    }
  }
}
