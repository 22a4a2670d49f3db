#pragma once

#include "trank/int_matrix.hpp"

namespace trank {

/// Smith decomposition U * m * V = D with U, V unimodular and D diagonal with
/// nonnegative entries satisfying d1 | d2 | ...
struct SmithResult {
  IntMatrix U, D, V;
};

/// Pivot choice: smallest nonzero absolute value in the active submatrix,
/// ties broken in row-major order.
SmithResult smith_normal_form(const IntMatrix& m);

/// Diagonal of D (length min(rows, cols)).
std::vector<BigInt> smith_diagonal(const SmithResult& s);

}  // namespace trank
