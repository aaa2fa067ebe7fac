#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "ivp/numeric.hpp"

namespace ivp {

using IntRows = std::vector<std::vector<Int>>;

// In-place row Hermite normal form over the first lead_cols columns; any
// trailing columns ride along (used to carry a transform). Pivots end up
// positive, entries above each pivot reduced into [0, pivot). Returns the
// number of pivot rows; rows beyond that are zero in the leading block.
inline int hnf_rows(IntRows& rows, int lead_cols) {
  const int m = static_cast<int>(rows.size());
  int pr = 0;
  for (int col = 0; col < lead_cols && pr < m; ++col) {
    // Euclid down the column until a single nonzero remains at pr.
    for (;;) {
      int best = -1;
      for (int i = pr; i < m; ++i) {
        if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] == 0) continue;
        if (best < 0 ||
            abs(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)]) <
                abs(rows[static_cast<std::size_t>(best)][static_cast<std::size_t>(col)]))
          best = i;
      }
      if (best < 0) break;  // column is zero below pr
      std::swap(rows[static_cast<std::size_t>(pr)], rows[static_cast<std::size_t>(best)]);
      bool others = false;
      const Int pivot = rows[static_cast<std::size_t>(pr)][static_cast<std::size_t>(col)];
      for (int i = pr + 1; i < m; ++i) {
        Int& v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
        if (v == 0) continue;
        Int q = v / pivot;
        if (q != 0)
          for (std::size_t j = 0; j < rows[static_cast<std::size_t>(i)].size(); ++j)
            rows[static_cast<std::size_t>(i)][j] -= q * rows[static_cast<std::size_t>(pr)][j];
        if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) others = true;
      }
      if (!others) break;
    }
    Int& pivot = rows[static_cast<std::size_t>(pr)][static_cast<std::size_t>(col)];
    if (pivot == 0) continue;
    if (pivot < 0)
      for (auto& v : rows[static_cast<std::size_t>(pr)]) v = -v;
    for (int i = 0; i < pr; ++i) {
      Int q = floor_div(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)], pivot);
      if (q != 0)
        for (std::size_t j = 0; j < rows[static_cast<std::size_t>(i)].size(); ++j)
          rows[static_cast<std::size_t>(i)][j] -= q * rows[static_cast<std::size_t>(pr)][j];
    }
    ++pr;
  }
  return pr;
}

// Basis of { v in Z^c : B v = 0 } for an r x c integer matrix B, via row
// reduction of [B^T | I].
inline IntRows integer_kernel(const IntRows& b, int r, int c) {
  IntRows work(static_cast<std::size_t>(c));
  for (int i = 0; i < c; ++i) {
    auto& row = work[static_cast<std::size_t>(i)];
    row.assign(static_cast<std::size_t>(r + c), Int(0));
    for (int j = 0; j < r; ++j) row[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    row[static_cast<std::size_t>(r + i)] = 1;
  }
  hnf_rows(work, r);
  IntRows kernel;
  for (const auto& row : work) {
    bool lead_zero = true;
    for (int j = 0; j < r; ++j)
      if (row[static_cast<std::size_t>(j)] != 0) {
        lead_zero = false;
        break;
      }
    if (!lead_zero) continue;
    kernel.emplace_back(row.begin() + r, row.end());
  }
  return kernel;
}

// Canonical generating set over Z/dZ of the span of the given length-c
// vectors together with d*Z^c: full HNF, rows whose pivot equals d are
// redundant mod d and dropped, remaining rows reduced into [0, d).
// Generators come out sorted by pivot position with the pivot equal to the
// minimal positive representative, which divides d.
inline IntRows canonical_span(IntRows gens, int c, const Int& d) {
  assert(d >= 2);
  for (int i = 0; i < c; ++i) {
    std::vector<Int> e(static_cast<std::size_t>(c), Int(0));
    e[static_cast<std::size_t>(i)] = d;
    gens.push_back(std::move(e));
  }
  const int rank = hnf_rows(gens, c);
  assert(rank == c);
  IntRows out;
  for (int i = 0; i < rank; ++i) {
    auto& row = gens[static_cast<std::size_t>(i)];
    const Int& pivot = row[static_cast<std::size_t>(i)];
    assert(pivot > 0 && d % pivot == 0);
    if (pivot == d) continue;  // multiple of d*e_i plus later rows
    for (auto& v : row) v = mod_reduce(v, d);
    out.push_back(std::move(row));
  }
  return out;
}

// Canonical generators of { v in (Z/dZ)^c : A v = 0 }, A given as r x c
// residue rows. Computed through the integer kernel of [A | d*I].
inline IntRows kernel_mod_d(const IntRows& a, int r, int c, const Int& d) {
  IntRows augmented(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    auto& row = augmented[static_cast<std::size_t>(i)];
    row.assign(static_cast<std::size_t>(c + r), Int(0));
    for (int j = 0; j < c; ++j) row[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    row[static_cast<std::size_t>(c + i)] = d;
  }
  IntRows kernel = integer_kernel(augmented, r, c + r);
  IntRows projected;
  projected.reserve(kernel.size());
  for (auto& row : kernel) projected.emplace_back(row.begin(), row.begin() + c);
  return canonical_span(std::move(projected), c, d);
}

// Span membership test against a canonical generator list (mod d).
inline bool in_span_mod_d(const IntRows& gens, const std::vector<Int>& v, int c, const Int& d) {
  IntRows with = gens;
  with.push_back(v);
  return canonical_span(std::move(with), c, d) == canonical_span(gens, c, d);
}

}  // namespace ivp
