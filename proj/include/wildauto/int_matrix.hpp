#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "wildauto/bigint.hpp"

namespace wildauto {

/// Dense matrix over arbitrary-precision integers, row-major.
///
/// Deliberately not a general matrix library: it carries exactly the
/// operations the normal-form and decision routines need, all exact.
/// Immutable-by-convention value type; operations return fresh matrices.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  /// Row-of-rows construction, mainly for literals in tests and docs.
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix diagonal(const std::vector<Int>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const IntMatrix& other) const = default;

  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix operator-() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator*(const Int& scalar) const;

  IntMatrix transpose() const;
  /// M^k by repeated squaring; k = 0 gives the identity. Requires square.
  IntMatrix pow(unsigned long k) const;

  /// Exact determinant (fraction-free Bareiss elimination). Requires square.
  Int det() const;
  /// Rank over the rationals (equivalently, the lattice rank of the rows).
  std::size_t rank() const;

  /// M * v for an integer column vector.
  std::vector<Int> apply(const std::vector<Int>& v) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row_i += c * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
  /// col_i += c * col_j
  void add_col_multiple(std::size_t i, std::size_t j, const Int& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

inline IntMatrix operator*(const Int& scalar, const IntMatrix& m) { return m * scalar; }

}  // namespace wildauto
