#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "ivp/matrix.hpp"
#include "ivp/modpoly.hpp"
#include "ivp/numeric.hpp"
#include "ivp/poly.hpp"

namespace ivp {

// Witness kinds carried by a negative verdict. Each one re-checks as a
// genuine violation of the membership being tested.
struct WitnessResidue {
  Int value;  // integer residue a with g(a) != 0 mod den
  friend bool operator==(const WitnessResidue&, const WitnessResidue&) = default;
};

struct WitnessMonicResiduePoly {
  ModPoly poly;  // monic residue divisor leaving a nonzero remainder
  friend bool operator==(const WitnessMonicResiduePoly&, const WitnessMonicResiduePoly&) = default;
};

struct WitnessResiduePoly {
  ModPoly poly;  // low-degree residue h with g(h) != 0 in (Z/d)[X]/(p)
  friend bool operator==(const WitnessResiduePoly&, const WitnessResiduePoly&) = default;
};

struct WitnessResidueMatrix {
  ModMat mat;  // matrix with g(M) != 0 mod den
  friend bool operator==(const WitnessResidueMatrix&, const WitnessResidueMatrix&) = default;
};

struct WitnessOkResidue {
  Int a, b;  // residue a + b*w of O_K/dO_K with g(a + b*w) != 0
  friend bool operator==(const WitnessOkResidue&, const WitnessOkResidue&) = default;
};

struct WitnessNonIntegralCharpoly {
  QPoly charpoly;  // charpoly of f(C_p) with a non-integer coefficient
  friend bool operator==(const WitnessNonIntegralCharpoly&, const WitnessNonIntegralCharpoly&) = default;
};

struct WitnessConductorCoords {
  Int x, y;    // f(alpha) in the {1, w} basis of O_K
  Int index;   // conductor index c with c not dividing some coordinate
  friend bool operator==(const WitnessConductorCoords&, const WitnessConductorCoords&) = default;
};

using Witness = std::variant<WitnessResidue, WitnessMonicResiduePoly, WitnessResiduePoly,
                             WitnessResidueMatrix, WitnessOkResidue, WitnessNonIntegralCharpoly,
                             WitnessConductorCoords>;

struct MembershipVerdict {
  bool member = false;
  std::optional<Witness> witness;  // present iff !member

  static MembershipVerdict yes() { return {true, std::nullopt}; }
  static MembershipVerdict no(Witness w) { return {false, std::move(w)}; }
};

}  // namespace ivp
