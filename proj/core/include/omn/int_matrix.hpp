#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "omn/rational.hpp"

namespace omn {

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Builds a matrix from its columns.
  static IntMatrix from_columns(const std::vector<std::vector<BigInt>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<BigInt> column(std::size_t c) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row(std::size_t target, std::size_t source, const BigInt& factor);
  /// col[target] += factor * col[source]
  void add_col(std::size_t target, std::size_t source, const BigInt& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  bool is_diagonal() const;
  BigInt determinant() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

std::string to_string(const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal with nonnegative entries
/// d_1 | d_2 | ... (zeros last).
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const;
  std::vector<BigInt> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Inverse of a unimodular matrix. Throws InvalidInput when det != +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

}  // namespace omn
