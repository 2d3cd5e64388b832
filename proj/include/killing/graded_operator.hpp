#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "killing/graded_space.hpp"
#include "killing/sparse_matrix.hpp"

namespace killing {

/// Change of (Hermite degree, symmetric degree) effected by one homogeneous piece.
struct Shift {
  int dq = 0;
  int dp = 0;
  friend auto operator<=>(const Shift&, const Shift&) = default;
};

inline BlockKey operator+(BlockKey key, Shift s) { return {key.q + s.dq, key.p + s.dp}; }
inline BlockKey operator-(BlockKey key, Shift s) { return {key.q - s.dq, key.p - s.dp}; }

using Domain = std::set<BlockKey>;

/// Blocks (q, p) for q = 0..q_max and each listed p >= 0.
Domain block_range(int q_max, std::initializer_list<int> ps);
Domain block_range(int q_max, const std::vector<int>& ps);

/// A linear map between direct sums of blocks H^q (x) S^p, stored as one
/// matrix per (source, target) pair.
///
/// `domain` is the set of source blocks on which the operator is known
/// exactly (all its pieces are present, zero pieces simply omitted).
/// Composition and adjoints shrink the domain to the blocks where the
/// result is still exact, so truncation can never leak into a result.
class GradedOperator {
 public:
  using BlockMap = std::map<std::pair<BlockKey, BlockKey>, SparseMatrix>;

  GradedOperator(std::size_t n, Domain domain, std::set<Shift> shifts);

  static GradedOperator identity(std::size_t n, const Domain& domain);
  static GradedOperator zero(std::size_t n, const Domain& domain);

  std::size_t n() const { return n_; }
  const Domain& domain() const { return domain_; }
  const std::set<Shift>& shifts() const { return shifts_; }
  const BlockMap& blocks() const { return blocks_; }

  /// nullptr when the piece is zero.
  const SparseMatrix* block(BlockKey source, BlockKey target) const;

  /// Accumulates into the (source, target) piece. Throws std::invalid_argument
  /// if source is outside the domain, the shift is undeclared, or the
  /// dimensions do not match the blocks.
  void add_block(BlockKey source, BlockKey target, const SparseMatrix& m);

  /// Valid target blocks reachable from source through a declared shift.
  std::vector<BlockKey> targets(BlockKey source) const;

  /// Drops every source block outside `keep`. Throws std::logic_error if
  /// `keep` asks for a block that is not in the exact domain.
  GradedOperator restricted(const Domain& keep) const;

  GradedOperator scaled(const Rational& factor) const;

  GradedOperator& operator+=(const GradedOperator& other);
  GradedOperator& operator-=(const GradedOperator& other);
  friend GradedOperator operator+(GradedOperator a, const GradedOperator& b) { return a += b; }
  friend GradedOperator operator-(GradedOperator a, const GradedOperator& b) { return a -= b; }

  /// Blockwise exact equality on identical domains.
  friend bool operator==(const GradedOperator& a, const GradedOperator& b);

 private:
  std::size_t n_;
  Domain domain_;
  std::set<Shift> shifts_;
  BlockMap blocks_;
};

/// a o b. Exact on every source of b whose whole image lies in a's domain.
GradedOperator compose(const GradedOperator& a, const GradedOperator& b);

/// Blockwise Gram adjoint. Exact on every target block whose full preimage
/// under the declared shifts lies in the domain of `a`. Blocks listed in
/// `also` join under the same rule even when nothing maps onto them.
GradedOperator adjoint(const GradedOperator& a, const Domain& also = {});

struct BlockDiscrepancy {
  BlockKey source;
  BlockKey target;
  Rational max_abs;
};

/// Pieces where a and b differ on `on`, with the largest |a - b| entry.
/// Throws std::logic_error if either operator is not exact on `on`.
std::vector<BlockDiscrepancy> compare(const GradedOperator& a, const GradedOperator& b, const Domain& on);

/// Assembles the operator as one matrix from the blocks of `sources`
/// (columns, in set order) to the blocks of `targets` (rows, in set order).
/// Pieces landing outside `targets` throw std::logic_error.
SparseMatrix flatten(const GradedOperator& a, const Domain& sources, const Domain& targets);

}  // namespace killing
