#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

namespace trank {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix of arbitrary-precision integers; all arithmetic is exact.
class IntMatrix {
public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row(i) += factor * row(j)
  void add_row(std::size_t i, std::size_t j, const BigInt& factor);
  /// col(i) += factor * col(j)
  void add_col(std::size_t i, std::size_t j, const BigInt& factor);
  void negate_row(std::size_t i);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_, cols_;
  std::vector<BigInt> data_;
};

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& m);

}  // namespace trank
