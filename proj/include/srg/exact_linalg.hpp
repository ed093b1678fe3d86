#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace srg {

using BigInt = mpz_class;
using Rational = mpq_class;

/// How data-parallel kernels are dispatched. `serial` is the reference path
/// kept for testing; `parallel` uses OpenMP.
enum class Execution { serial, parallel };

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<BigInt> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const BigInt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b);
  /// this += s * I (square only).
  IntMatrix& add_diagonal(const BigInt& s);
  /// Copy with row r and column c removed.
  IntMatrix without(std::size_t r, std::size_t c) const;
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix& o) const = default;

  /// m * v over the rationals.
  std::vector<Rational> apply(std::span<const Rational> v) const;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Rational vector with every entry in lowest terms (mpq canonical form).
struct RationalVector {
  std::vector<Rational> entries;

  std::size_t size() const { return entries.size(); }
  bool is_zero() const;
  bool is_integral() const;
  bool operator==(const RationalVector&) const = default;
};

/// Row echelon form produced by fraction-free (Bareiss) elimination.
///
/// After step k every surviving entry equals a (k+1)x(k+1) minor of the row-
/// permuted input, so each division by the previous pivot is exact.
struct EchelonForm {
  IntMatrix reduced;                 // rows >= rank are zero
  std::vector<std::size_t> pivots;   // pivot column of each of the first rank rows
  int permutation_sign = 1;          // sign of the row permutation applied
  std::size_t rank() const { return pivots.size(); }
};

/// Bareiss elimination with partial pivoting on magnitude. Columns without a
/// nonzero candidate are skipped, so the input may be rectangular and rank
/// deficient.
EchelonForm bareiss_echelon(IntMatrix m, Execution exec = Execution::parallel);

/// Exact rank over Q.
std::size_t rank(const IntMatrix& m, Execution exec = Execution::parallel);
/// cols - rank; throws DomainError for a non-square matrix.
std::size_t nullity(const IntMatrix& m, Execution exec = Execution::parallel);
/// Exact determinant; throws DomainError for a non-square matrix.
BigInt determinant(const IntMatrix& m, Execution exec = Execution::parallel);

/// Kernel basis over Q, one vector per non-pivot column. Each vector is
/// scaled to a primitive integer vector whose entry at its free column is
/// positive. Rectangular input is accepted.
std::vector<RationalVector> null_space(const IntMatrix& m, Execution exec = Execution::parallel);

}  // namespace srg
