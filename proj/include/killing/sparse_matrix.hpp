#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "killing/rational.hpp"

namespace killing {

struct Entry {
  std::size_t index;
  Rational value;
};

/// A sparse vector: entries strictly increasing in index, no stored zeros.
using SparseVector = std::vector<Entry>;

/// Exact sparse matrix over Q, stored by columns. Each column is a
/// SparseVector of row entries. Zero entries are never stored.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix identity(std::size_t n);
  /// From a dense row-major list of rows; used in tests and small fixtures.
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nnz() const;
  bool is_zero() const;

  /// Adds value to entry (row, col); removes the entry if it cancels.
  void add(std::size_t row, std::size_t col, const Rational& value);
  Rational at(std::size_t row, std::size_t col) const;

  std::span<const Entry> column(std::size_t col) const { return columns_[col]; }
  void set_column(std::size_t col, SparseVector entries);

  SparseMatrix transpose() const;
  SparseMatrix scaled(const Rational& factor) const;
  /// Largest |entry|, zero for the zero matrix.
  Rational max_abs() const;

  std::vector<std::vector<Rational>> to_dense() const;
  std::string to_string() const;

  SparseMatrix& operator+=(const SparseMatrix& other);
  SparseMatrix& operator-=(const SparseMatrix& other);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

/// Exact product; throws std::invalid_argument on a dimension mismatch.
SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

/// Kronecker product with a's index varying slower: row (i, j) -> i * b.rows() + j.
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

SparseMatrix vstack(std::span<const SparseMatrix> parts);
SparseMatrix hstack(std::span<const SparseMatrix> parts);

/// y = A x for a sparse column vector x.
SparseVector apply(const SparseMatrix& a, const SparseVector& x);

/// x + factor * y.
SparseVector axpy(const SparseVector& x, const Rational& factor, const SparseVector& y);

/// Unique A* with <Ax, y>_cod = <x, A* y>_dom for diagonal Gram weights:
/// A* = G_dom^{-1} A^T G_cod. Throws std::invalid_argument on a
/// non-positive weight or a size mismatch.
SparseMatrix gram_adjoint(const SparseMatrix& a, std::span<const Rational> gram_domain,
                          std::span<const Rational> gram_codomain);

}  // namespace killing
