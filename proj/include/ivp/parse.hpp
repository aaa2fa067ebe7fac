#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "ivp/candidate.hpp"
#include "ivp/errors.hpp"
#include "ivp/matrix.hpp"
#include "ivp/numeric.hpp"
#include "ivp/poly.hpp"

namespace ivp {

namespace detail {

// Recursive-descent reader for the shared polynomial syntax: integers and
// fractions, the variable x/X, ^ powers, ()-groups, * / + -, plus the
// low-to-high coefficient list form [c0, c1, ...].
class PolyReader {
 public:
  explicit PolyReader(std::string_view text) : s_(text) {}

  QPoly read_poly() {
    skip_ws();
    QPoly result = peek() == '[' ? read_coeff_list() : read_expr();
    skip_ws();
    if (!at_end()) throw ParseError("unexpected trailing input", token_here());
    return result;
  }

  QMat read_matrix() {
    skip_ws();
    expect('[');
    std::vector<std::vector<Rat>> rows;
    skip_ws();
    if (peek() == '[') {
      // [[a,b],[c,d]]
      for (;;) {
        rows.push_back(read_row_brackets());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          skip_ws();
          continue;
        }
        break;
      }
    } else {
      // [a,b;c,d]
      rows.emplace_back();
      for (;;) {
        rows.back().push_back(read_rational());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ';') {
          ++pos_;
          rows.emplace_back();
          continue;
        }
        break;
      }
    }
    expect(']');
    skip_ws();
    if (!at_end()) throw ParseError("unexpected trailing input", token_here());
    const std::size_t n = rows.size();
    if (n == 0) throw ParseError("empty matrix", "[]");
    std::vector<Rat> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw ParseError("matrix is not square", token_here());
      for (const auto& v : row) entries.push_back(v);
    }
    return QMat(static_cast<int>(n), std::move(entries));
  }

 private:
  QPoly read_expr() {
    QPoly acc = read_term();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + read_term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - read_term();
      } else {
        return acc;
      }
    }
  }

  QPoly read_term() {
    QPoly acc = read_signed_factor();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * read_signed_factor();
      } else if (c == '/') {
        ++pos_;
        const QPoly divisor = read_signed_factor();
        if (divisor.is_zero()) throw ParseError("division by zero", "/");
        if (divisor.degree() != 0)
          throw ParseError("divisor must be a nonzero constant", token_here());
        acc = (Rat(1) / divisor.coeff(0)) * acc;
      } else if (c == '(' || c == 'x' || c == 'X' || std::isdigit(static_cast<unsigned char>(c))) {
        acc = acc * read_signed_factor();  // implicit product, e.g. 3x
      } else {
        return acc;
      }
    }
  }

  QPoly read_signed_factor() {
    skip_ws();
    bool neg = false;
    while (peek() == '+' || peek() == '-') {
      if (peek() == '-') neg = !neg;
      ++pos_;
      skip_ws();
    }
    QPoly f = read_factor();
    return neg ? -f : f;
  }

  QPoly read_factor() {
    skip_ws();
    const char c = peek();
    QPoly base;
    if (c == '(') {
      ++pos_;
      base = read_expr();
      skip_ws();
      expect(')');
    } else if (c == 'x' || c == 'X') {
      ++pos_;
      base = QPoly::monomial(1);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = QPoly::constant(Rat(read_integer()));
    } else {
      throw ParseError("expected a number, x, or (", token_here());
    }
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const Int e = read_integer();
      if (e < 0 || e > 4096) throw ParseError("exponent out of range", e.str());
      QPoly acc = QPoly::constant(Rat(1));
      for (Int i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  QPoly read_coeff_list() {
    expect('[');
    std::vector<Rat> coeffs;
    skip_ws();
    if (peek() != ']') {
      for (;;) {
        coeffs.push_back(read_rational());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(']');
    return QPoly(std::move(coeffs));
  }

  std::vector<Rat> read_row_brackets() {
    expect('[');
    std::vector<Rat> row;
    skip_ws();
    if (peek() != ']') {
      for (;;) {
        row.push_back(read_rational());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(']');
    return row;
  }

  Rat read_rational() {
    skip_ws();
    bool neg = false;
    while (peek() == '+' || peek() == '-') {
      if (peek() == '-') neg = !neg;
      ++pos_;
      skip_ws();
    }
    Int num = read_integer();
    Rat value(num);
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      Int den = read_integer();
      if (den == 0) throw ParseError("division by zero", "/");
      value = make_rat(num, den);
    }
    return neg ? Rat(-value) : value;
  }

  Int read_integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected an integer", token_here());
    return Int(std::string(s_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", token_here());
    ++pos_;
  }

  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  bool at_end() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string token_here() const {
    if (at_end()) return "<end of input>";
    std::size_t end = pos_;
    while (end < s_.size() && !std::isspace(static_cast<unsigned char>(s_[end])) && end - pos_ < 12)
      ++end;
    return std::string(s_.substr(pos_, end - pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline QPoly parse_qpoly(std::string_view text) { return detail::PolyReader(text).read_poly(); }

inline ZPoly parse_zpoly(std::string_view text) {
  const QPoly f = parse_qpoly(text);
  if (!has_integer_coeffs(f))
    throw ParseError("expected integer coefficients", std::string(text));
  return to_zpoly(f);
}

inline IvpCandidate parse_candidate(std::string_view text) {
  return IvpCandidate::from_qpoly(parse_qpoly(text));
}

inline QMat parse_qmat(std::string_view text) { return detail::PolyReader(text).read_matrix(); }

inline ZMat parse_zmat(std::string_view text) {
  const QMat m = parse_qmat(text);
  std::vector<Int> entries;
  entries.reserve(m.entries().size());
  for (const auto& v : m.entries()) {
    if (!is_integer(v)) throw ParseError("expected integer matrix entries", std::string(text));
    entries.push_back(numerator(v));
  }
  return ZMat(m.dim(), std::move(entries));
}

}  // namespace ivp
