#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "killing/graded_operator.hpp"

namespace killing {

/// One model operator instance: dimension n, symmetric degree p, Morse
/// index m (coordinates k < m carry sign -1), and the largest Hermite
/// degree of the domain blocks.
struct ModelSpec {
  std::size_t n = 1;
  unsigned p = 0;
  std::size_t m = 0;
  unsigned q_max = 0;

  /// Throws std::invalid_argument unless n >= 1 and m <= n.
  void validate() const;
  /// Domain blocks H^q (x) S^p, q <= q_max.
  Domain domain() const;
};

/// s_k: -1 for k < m, +1 otherwise.
int morse_sign(std::size_t k, std::size_t m);

/// K_w = P* P + Q* Q, adjoints taken blockwise under the Gram pairing.
GradedOperator assemble_factored(const ModelSpec& spec);

/// Pieces of the direct form w^{-1} D w + B + V.
struct DirectParts {
  GradedOperator weighted_laplacian;  // w^{-1} D w
  GradedOperator endomorphism;        // B
  GradedOperator potential;           // V
};
DirectParts assemble_direct_parts(const ModelSpec& spec);
GradedOperator assemble_direct(const ModelSpec& spec);

/// Result of an exact operator identity check. Failure is data.
struct IdentityReport {
  std::string name;
  bool passed = true;
  std::vector<BlockDiscrepancy> discrepancies;
  std::string detail;
};

/// direct == factored on every domain block.
IdentityReport verify_factorization(const ModelSpec& spec);

/// Q*Q - QQ* = 2 sum C_k A_k + 2 sum_{k<m} c_k a_k - 2 sum_{k>=m} c_k a_k + 2m.
IdentityReport verify_commutator_QQ(const ModelSpec& spec);

/// V = 2 F* F + |y|^2 with F = sum_k s_k y_k a_k.
IdentityReport verify_V_psd(const ModelSpec& spec);

/// Gram adjoints of P and Q equal their written-out adjoint formulas.
IdentityReport verify_adjoint_formulas(const ModelSpec& spec);

/// K_w equals its own Gram adjoint on the domain blocks.
IdentityReport verify_self_adjoint(const ModelSpec& spec);

/// K_w only moves Hermite degree by -2, 0, +2 (and by 0 alone when m = 0).
IdentityReport verify_degree_shifts(const ModelSpec& spec);

}  // namespace killing
