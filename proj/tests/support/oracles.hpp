#pragma once

// Independent brute-force oracles used to cross-check the library. These
// deliberately avoid the code paths they verify.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "trank/int_matrix.hpp"
#include "trank/laurent.hpp"
#include "trank/word.hpp"

namespace testsupport {

using Rational = boost::multiprecision::cpp_rational;

/// Rank over Q of a rational matrix by plain Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col] / m[row][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

/// Evaluates a Laurent polynomial at a nonzero rational point.
inline Rational evaluate_at(const trank::LaurentPoly& p, const Rational& t0) {
  Rational acc = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational pw = 1;
    for (long long i = 0; i < (e >= 0 ? e : -e); ++i) pw *= t0;
    if (e < 0) pw = 1 / pw;
    acc += Rational(c) * pw;
  }
  return acc;
}

/// Rank over Q of the matrix evaluated at t0; always <= the rank over Q(t).
inline std::size_t evaluated_rank(const trank::LaurentMatrix& m, const Rational& t0) {
  std::vector<std::vector<Rational>> rows(m.rows, std::vector<Rational>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) rows[i][j] = evaluate_at(m.at(i, j), t0);
  return rational_rank(std::move(rows));
}

/// Determinant by cofactor expansion (small matrices only).
inline trank::BigInt cofactor_determinant(const std::vector<std::vector<trank::BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  trank::BigInt det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<trank::BigInt>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<trank::BigInt> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    const trank::BigInt term = m[0][j] * cofactor_determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

/// gcd of all k x k minors (the k-th determinantal divisor), brute force over
/// row and column subsets.
inline trank::BigInt minor_gcd(const trank::IntMatrix& m, std::size_t k) {
  std::vector<std::size_t> rows(k), cols(k);
  trank::BigInt g = 0;

  const auto enumerate = [&](auto&& self, std::vector<std::size_t>& idx, std::size_t limit,
                             std::size_t depth, auto&& leaf) -> void {
    if (depth == k) {
      leaf();
      return;
    }
    const std::size_t start = depth == 0 ? 0 : idx[depth - 1] + 1;
    for (std::size_t v = start; v < limit; ++v) {
      idx[depth] = v;
      self(self, idx, limit, depth + 1, leaf);
    }
  };

  enumerate(enumerate, rows, m.rows(), 0, [&] {
    enumerate(enumerate, cols, m.cols(), 0, [&] {
      std::vector<std::vector<trank::BigInt>> sub(k, std::vector<trank::BigInt>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m.at(rows[i], cols[j]);
      g = gcd(g, cofactor_determinant(sub));
    });
  });
  return g < 0 ? trank::BigInt(-g) : g;
}

/// Rank over Q of an integer matrix (independent of the Smith code).
inline std::size_t integer_matrix_rank(const trank::IntMatrix& m) {
  std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = Rational(m.at(i, j));
  return rational_rank(std::move(rows));
}

/// All freely reduced words of length exactly len over `gens` generators.
inline void enumerate_reduced_words(int gens, int len, std::vector<trank::Word>& out) {
  std::vector<trank::Letter> current;
  const auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(trank::Word::reduce(current));
      return;
    }
    for (int g = 0; g < gens; ++g) {
      for (const long long e : {1LL, -1LL}) {
        if (!current.empty() && current.back().gen == g && current.back().exp == -e) continue;
        current.push_back({g, e});
        self(self, remaining - 1);
        current.pop_back();
      }
    }
  };
  rec(rec, len);
}

}  // namespace testsupport
