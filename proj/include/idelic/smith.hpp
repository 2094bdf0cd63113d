#pragma once

// Smith and Hermite normal forms, integer kernels, and solving linear
// systems modulo a subgroup. All routines are exact and deterministic.

#include <cstddef>
#include <optional>
#include <vector>

#include "idelic/int_matrix.hpp"

namespace idelic {

/// U * A * V == D with U, V unimodular and D diagonal with
/// d_0 | d_1 | ... | d_{rank-1} > 0 and zeros afterwards.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  IntVector diagonal() const {
    IntVector d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

// Position of the minimal-|.| nonzero entry in the trailing block starting
// at (t, t); ties resolved by row-major order.
inline std::optional<std::pair<std::size_t, std::size_t>> min_abs_entry(const IntMatrix& m,
                                                                        std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Integer a = abs(m(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
  IntMatrix& d = s.D;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool found_pivot = false;
    while (true) {
      auto pos = detail::min_abs_entry(d, t);
      if (!pos) break;
      found_pivot = true;
      d.swap_rows(t, pos->first);
      s.U.swap_rows(t, pos->first);
      d.swap_cols(t, pos->second);
      s.V.swap_cols(t, pos->second);

      bool residue = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);  // truncating: |remainder| < |pivot|
        d.add_row_multiple(i, t, -q);
        s.U.add_row_multiple(i, t, -q);
        residue = residue || d(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        s.V.add_col_multiple(j, t, -q);
        residue = residue || d(t, j) != 0;
      }
      if (residue) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            s.U.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (!found_pivot) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
    s.rank = t + 1;
  }
  return s;
}

/// Canonical (column-style) Hermite basis of the lattice spanned by the
/// columns of `generators`. The result is lower echelon: each column has a
/// positive pivot strictly below the previous column's pivot, and entries to
/// the left of a pivot lie in [0, pivot). Zero generators and dependencies
/// are dropped, so the result has full column rank.
inline IntMatrix hermite_column_basis(const IntMatrix& generators) {
  IntMatrix h = generators;
  const std::size_t m = h.rows(), k = h.cols();
  std::size_t c = 0;
  for (std::size_t p = 0; p < m && c < k; ++p) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t j = c; j < k; ++j)
        if (h(p, j) != 0 && (!best || abs(h(p, j)) < abs(h(p, *best)))) best = j;
      if (!best) break;
      h.swap_cols(c, *best);
      bool others = false;
      for (std::size_t j = c + 1; j < k; ++j) {
        if (h(p, j) == 0) continue;
        Integer q = h(p, j) / h(p, c);
        h.add_col_multiple(j, c, -q);
        others = others || h(p, j) != 0;
      }
      if (!others) break;
    }
    if (h(p, c) == 0) continue;
    if (h(p, c) < 0) h.negate_col(c);
    for (std::size_t j = 0; j < c; ++j) h.add_col_multiple(j, c, -floor_div(h(p, j), h(p, c)));
    ++c;
  }
  return h.column_block(0, c);
}

/// Row index of the first nonzero entry of column j, if any.
inline std::optional<std::size_t> pivot_row(const IntMatrix& basis, std::size_t j) {
  for (std::size_t i = 0; i < basis.rows(); ++i)
    if (basis(i, j) != 0) return i;
  return std::nullopt;
}

/// Reduces x against a Hermite basis so that x's entry at each pivot row
/// lands in [0, pivot).
inline IntVector reduce_by_hermite(IntVector x, const IntMatrix& basis) {
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    auto p = pivot_row(basis, j);
    if (!p) continue;
    Integer q = floor_div(x[*p], basis(*p, j));
    if (q == 0) continue;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= q * basis(i, j);
  }
  return x;
}

/// Basis (as columns, in Hermite form) of {x in Z^n : A x = 0}.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  return hermite_column_basis(s.V.column_block(s.rank, a.cols() - s.rank));
}

/// Finds x with A x - c in colspace(B), or nullopt. The returned solution is
/// canonical: reduced against the Hermite basis of {x : A x in colspace(B)}.
inline std::optional<IntVector> solve_mod_subgroup(const IntMatrix& a, const IntMatrix& b,
                                                   const IntVector& c) {
  assert(a.rows() == b.rows() && a.rows() == c.size());
  const std::size_t k = a.cols();
  IntMatrix combined = hconcat(a, b);
  SmithForm s = smith_normal_form(combined);

  IntVector rhs = s.U * c;
  IntVector y(combined.cols());
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(rhs[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), rhs[i].get_mpz_t(), s.D(i, i).get_mpz_t());
    } else if (rhs[i] != 0) {
      return std::nullopt;
    }
  }
  IntVector full = s.V * y;
  IntVector x(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(k));

  // Homogeneous solutions, projected to the x-coordinates.
  IntMatrix homogeneous = s.V.column_block(s.rank, combined.cols() - s.rank).row_block(0, k);
  return reduce_by_hermite(std::move(x), hermite_column_basis(homogeneous));
}

}  // namespace idelic
