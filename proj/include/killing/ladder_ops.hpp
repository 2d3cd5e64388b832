#pragma once

#include <cstddef>
#include <optional>

#include "killing/graded_operator.hpp"
#include "killing/sparse_matrix.hpp"

namespace killing {

// Single-factor matrices. Coordinates k are 0-based.

/// c_k : S^p -> S^{p+1}, e^J -> e^{J+1_k}.
SparseMatrix matrix_c(std::size_t k, std::size_t n, unsigned p);
/// a_k : S^p -> S^{p-1}, e^J -> j_k e^{J-1_k}. Requires p >= 1.
SparseMatrix matrix_a(std::size_t k, std::size_t n, unsigned p);
/// C_k = 2 y_k - d_k : H^q -> H^{q+1}, H_I -> H_{I+1_k}.
SparseMatrix matrix_C(std::size_t k, std::size_t n, unsigned q);
/// A_k = d_k / 2 : H^q -> H^{q-1}, H_I -> i_k H_{I-1_k}. Requires q >= 1.
SparseMatrix matrix_A(std::size_t k, std::size_t n, unsigned q);

/// Multiplication by y_k split by degree: y_k H_I = i_k H_{I-1_k} + H_{I+1_k} / 2.
struct MultiplyByY {
  std::optional<SparseMatrix> lower;  // H^q -> H^{q-1}; absent for q = 0
  SparseMatrix raise;                 // H^q -> H^{q+1}
};
MultiplyByY matrix_y(std::size_t k, std::size_t n, unsigned q);

enum class HermiteLadder { C, A, Y, D };  // raise, lower, multiply by y_k, d/dy_k
enum class SymLadder { c, a };

/// Operators on sums of blocks H^q (x) S^p, exact on `domain`.
GradedOperator hermite_op(HermiteLadder kind, std::size_t k, std::size_t n, const Domain& domain);
GradedOperator sym_op(SymLadder kind, std::size_t k, std::size_t n, const Domain& domain);
/// left_k (x) right_k in one step.
GradedOperator product_op(HermiteLadder left, SymLadder right, std::size_t k, std::size_t n, const Domain& domain);

enum class Part { minus, plus };

/// (left right)^- = sum over k < m, (left right)^+ = sum over k >= m, of left_k right_k.
/// `left` must be C or A.
GradedOperator composite(Part part, HermiteLadder left, SymLadder right, std::size_t n, std::size_t m,
                         const Domain& domain);

/// Full sums over all k, e.g. Ac = sum_k A_k c_k.
GradedOperator full_sum(HermiteLadder left, SymLadder right, std::size_t n, const Domain& domain);

/// P = (Ca)^- - 2 (Aa)^+ and Q = (Cc)^- - 2 (Ac)^+.
GradedOperator build_P(std::size_t n, std::size_t m, const Domain& domain);
GradedOperator build_Q(std::size_t n, std::size_t m, const Domain& domain);

/// Adjoints written out from a_k* = c_k and A_k* = C_k / 2:
/// P* = 2 (Ac)^- - (Cc)^+ and Q* = 2 (Aa)^- - (Ca)^+.
GradedOperator adjoint_P_formula(std::size_t n, std::size_t m, const Domain& domain);
GradedOperator adjoint_Q_formula(std::size_t n, std::size_t m, const Domain& domain);

/// Block matrices of sum_k left_k right_k on a single block (the m = 0 sums).
SparseMatrix block_sum_matrix(HermiteLadder left, SymLadder right, std::size_t n, unsigned q, unsigned p);

}  // namespace killing
