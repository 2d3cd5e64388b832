#pragma once

#include <cstddef>
#include <vector>

#include "killing/sparse_matrix.hpp"

namespace killing {

/// Columns span ker A. Canonical form: the transpose of `matrix` is in
/// reduced row echelon form, so each column has a leading 1 at its own
/// free coordinate and zeros at the other columns' leading coordinates.
struct KernelBasis {
  SparseMatrix matrix;
  std::size_t dim() const { return matrix.cols(); }
};

/// Exact rank by sparse rational Gaussian elimination.
std::size_t rank(const SparseMatrix& a);

/// Exact canonical kernel basis. dim = cols - rank.
KernelBasis nullspace(const SparseMatrix& a);

/// Column groups that share no row. A is block diagonal up to a permutation
/// with one block per group; each group is sorted, groups are ordered by
/// their smallest column.
std::vector<std::vector<std::size_t>> column_components(const SparseMatrix& a);

/// Submatrix of the given columns and the rows they touch.
SparseMatrix column_submatrix(const SparseMatrix& a, const std::vector<std::size_t>& columns);

/// OpenMP variants: eliminate each column component independently on up to
/// `jobs` threads. Results are identical to rank() / nullspace() for every
/// job count; those serial routines are the reference.
std::size_t rank_parallel(const SparseMatrix& a, int jobs);
KernelBasis nullspace_parallel(const SparseMatrix& a, int jobs);

}  // namespace killing
