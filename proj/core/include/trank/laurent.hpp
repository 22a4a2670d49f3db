#pragma once

#include <map>
#include <string>

#include "trank/int_matrix.hpp"

namespace trank {

/// Integer Laurent polynomial in one variable t. The zero polynomial has an
/// empty coefficient map; stored coefficients are never zero.
class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly term(long long exp, BigInt coeff);
  static LaurentPoly one() { return term(0, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<long long, BigInt>& terms() const { return coeffs_; }

  long long min_exp() const;
  long long max_exp() const;
  /// max_exp - min_exp; 0 for the zero polynomial.
  long long degree_span() const;

  void add_term(long long exp, const BigInt& coeff);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);

  /// Multiplies by c * t^shift.
  LaurentPoly scaled(const BigInt& c, long long shift) const;
  /// t -> t^-1 applied to every term.
  LaurentPoly reciprocal_variable() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Ascending exponents with explicit signs, e.g. "-2*t^-1 + 1 + 3*t^2".
  std::string to_string() const;

private:
  std::map<long long, BigInt> coeffs_;
};

struct LaurentMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<LaurentPoly> entries;

  LaurentMatrix() = default;
  LaurentMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  LaurentPoly& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

enum class PivotScan { RowMajor, ColMajor };

/// Exact rank of the matrix over the field of rational functions in t.
/// Fraction-free row elimination; rows are normalised between steps by
/// stripping the integer content and the common power of t (t is a unit).
/// Pivots are chosen by lowest degree span, ties broken by scan order.
std::size_t laurent_rank(const LaurentMatrix& m, PivotScan scan = PivotScan::RowMajor);

}  // namespace trank
