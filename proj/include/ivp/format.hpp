#pragma once

#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "ivp/candidate.hpp"
#include "ivp/density.hpp"
#include "ivp/matrix.hpp"
#include "ivp/matrix_lab.hpp"
#include "ivp/modpoly.hpp"
#include "ivp/numeric.hpp"
#include "ivp/poly.hpp"
#include "ivp/verdict.hpp"

namespace ivp {

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
  std::string s = numerator(v).str();
  if (denominator(v) != 1) s += "/" + denominator(v).str();
  return s;
}

namespace detail {

// Canonical print: terms highest degree first, unit coefficients elided,
// e.g. "x^2 - 8", "1/2*x^2 - 1/2*x", "0". Round-trips through the parser.
template <class T>
std::string poly_to_string(const Poly<T>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    T c = f.coeff(i);
    if (c == T(0)) continue;
    const bool negative = c < T(0);
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (negative) c = -c;
    const bool unit = (c == T(1));
    if (i == 0) {
      out << to_string(c);
    } else {
      if (!unit) out << to_string(c) << '*';
      out << 'x';
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

}  // namespace detail

inline std::string to_string(const ZPoly& f) { return detail::poly_to_string(f); }
inline std::string to_string(const QPoly& f) { return detail::poly_to_string(f); }
inline std::string to_string(const ModPoly& f) { return detail::poly_to_string(f.lift()); }
inline std::string to_string(const IvpCandidate& f) { return to_string(f.to_qpoly()); }

template <class T>
std::string matrix_to_string(const Mat<T>& m) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < m.dim(); ++i) {
    if (i) out << ',';
    out << '[';
    for (int j = 0; j < m.dim(); ++j) {
      if (j) out << ',';
      out << to_string(m(i, j));
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

inline std::string to_string(const ZMat& m) { return matrix_to_string(m); }
inline std::string to_string(const QMat& m) { return matrix_to_string(m); }
inline std::string to_string(const ModMat& m) { return matrix_to_string(m.lift()); }

inline std::string to_string(const Witness& w) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, WitnessResidue>) return to_string(v.value);
        else if constexpr (std::is_same_v<V, WitnessMonicResiduePoly>) return to_string(v.poly);
        else if constexpr (std::is_same_v<V, WitnessResiduePoly>) return to_string(v.poly);
        else if constexpr (std::is_same_v<V, WitnessResidueMatrix>) return to_string(v.mat);
        else if constexpr (std::is_same_v<V, WitnessOkResidue>)
          return to_string(v.a) + "+" + to_string(v.b) + "*w";
        else if constexpr (std::is_same_v<V, WitnessNonIntegralCharpoly>) return to_string(v.charpoly);
        else
          return to_string(v.x) + "+" + to_string(v.y) + "*w (index " + to_string(v.index) + ")";
      },
      w);
}

inline const char* witness_kind(const Witness& w) {
  return std::visit(
      [](const auto& v) -> const char* {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, WitnessResidue>) return "residue";
        else if constexpr (std::is_same_v<V, WitnessMonicResiduePoly>) return "monic_residue_poly";
        else if constexpr (std::is_same_v<V, WitnessResiduePoly>) return "residue_poly";
        else if constexpr (std::is_same_v<V, WitnessResidueMatrix>) return "residue_matrix";
        else if constexpr (std::is_same_v<V, WitnessOkResidue>) return "ok_residue";
        else if constexpr (std::is_same_v<V, WitnessNonIntegralCharpoly>) return "non_integral_charpoly";
        else return "conductor_coords";
      },
      w);
}

inline nlohmann::json to_json(const MembershipVerdict& v) {
  nlohmann::json j;
  j["member"] = v.member;
  if (v.witness)
    j["witness"] = {{"kind", witness_kind(*v.witness)}, {"value", to_string(*v.witness)}};
  else
    j["witness"] = nullptr;
  return j;
}

inline nlohmann::json to_json(const NullIdealSpan& s) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : s.generators) gens.push_back(to_string(g));
  return {{"modulus", to_string(s.modulus)}, {"degree_bound", s.degree_bound}, {"generators", gens}};
}

inline nlohmann::json to_json(const CoverageReport& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.classes) {
    nlohmann::json entry;
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& v : c.residue_class) cls.push_back(to_string(v));
    entry["class"] = cls;
    if (c.representative) {
      nlohmann::json rep = nlohmann::json::array();
      for (const auto& v : *c.representative) rep.push_back(to_string(v));
      entry["representative"] = rep;
      entry["k"] = *c.k;
    } else {
      entry["representative"] = nullptr;
      entry["k"] = nullptr;
    }
    classes.push_back(std::move(entry));
  }
  return {{"order", to_string(r.order_minpoly)},
          {"modulus", to_string(r.modulus)},
          {"exclude_generators", r.exclude_generators},
          {"k_bound", r.k_bound},
          {"not_found", r.not_found_count()},
          {"classes", classes}};
}

inline nlohmann::json to_json(const SandwichReport& r) {
  nlohmann::json upper = nlohmann::json::array();
  for (const auto& [D, verdict] : r.upper)
    upper.push_back({{"D", to_string(D)}, {"member", verdict.member}});
  return {{"candidate", to_string(r.candidate)},
          {"lower", to_json(r.lower)},
          {"upper", upper},
          {"consistent", r.consistent}};
}

inline nlohmann::json to_json(const FalsifierReport& r) {
  nlohmann::json survivors = nlohmann::json::array();
  for (const auto& f : r.survivors) survivors.push_back(to_string(f));
  nlohmann::json dens = nlohmann::json::array();
  for (const auto& d : r.space.denominators) dens.push_back(to_string(d));
  return {{"space",
           {{"denominators", dens},
            {"max_degree", r.space.max_degree},
            {"coeff_bound", r.space.coeff_bound},
            {"alpha_coeff_bound", r.space.alpha_coeff_bound},
            {"samples_per_denominator", r.space.samples_per_denominator}}},
          {"seed", r.seed},
          {"candidates_tested", r.candidates_tested},
          {"alpha_sample_size", r.alpha_sample_size},
          {"survivors", survivors}};
}

}  // namespace ivp
