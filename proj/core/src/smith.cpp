#include "trank/smith.hpp"

#include <algorithm>

namespace trank {

namespace {

// Smallest nonzero |entry| in the submatrix with corner (t, t); row-major tie
// break. Returns false when the submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  BigInt best;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      const BigInt& v = d.at(i, j);
      if (v == 0) continue;
      BigInt a = abs(v);
      if (!found || a < best) {
        found = true;
        best = std::move(a);
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithResult s{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& U = s.U;
  IntMatrix& D = s.D;
  IntMatrix& V = s.V;

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(D, t, pi, pj)) break;
    for (;;) {
      D.swap_rows(t, pi);
      U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      V.swap_cols(t, pj);

      // Reduce the pivot column and row; leftover remainders are strictly
      // smaller than the pivot, so re-picking converges.
      bool leftovers = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D.at(i, t) == 0) continue;
        BigInt q = D.at(i, t) / D.at(t, t);
        if (q != 0) {
          D.add_row(i, t, -q);
          U.add_row(i, t, -q);
        }
        if (D.at(i, t) != 0) leftovers = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D.at(t, j) == 0) continue;
        BigInt q = D.at(t, j) / D.at(t, t);
        if (q != 0) {
          D.add_col(j, t, -q);
          V.add_col(j, t, -q);
        }
        if (D.at(t, j) != 0) leftovers = true;
      }
      if (leftovers) {
        find_pivot(D, t, pi, pj);
        continue;
      }

      // Pivot row and column are clear; enforce divisibility of the rest.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (D.at(i, j) % D.at(t, t) != 0) {
            D.add_row(t, i, 1);
            U.add_row(t, i, 1);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
      find_pivot(D, t, pi, pj);
    }
    if (D.at(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  return s;
}

std::vector<BigInt> smith_diagonal(const SmithResult& s) {
  std::vector<BigInt> diag;
  const std::size_t n = std::min(s.D.rows(), s.D.cols());
  diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) diag.push_back(s.D.at(i, i));
  return diag;
}

}  // namespace trank
