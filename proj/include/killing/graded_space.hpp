#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "killing/combinatorics.hpp"
#include "killing/multi_index.hpp"

namespace killing {

/// Ordered monomial basis e^J of S^p, |J| = p.
class SymBasis {
 public:
  SymBasis(std::size_t n, unsigned p);
  std::size_t n() const { return n_; }
  unsigned degree() const { return p_; }
  std::size_t size() const { return monomials_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<MultiIndex>& monomials() const { return monomials_; }
  std::optional<std::size_t> index_of(const MultiIndex& j) const;

 private:
  std::size_t n_;
  unsigned p_;
  std::vector<MultiIndex> monomials_;
  std::map<MultiIndex, std::size_t> lookup_;
};

/// Ordered Hermite polynomial basis H_I of H^q, |I| = q. Same ordering as
/// SymBasis; kept as a separate type so the two factors cannot be mixed up.
class HermiteBasis {
 public:
  HermiteBasis(std::size_t n, unsigned q) : inner_(n, q) {}
  std::size_t n() const { return inner_.n(); }
  unsigned degree() const { return inner_.degree(); }
  std::size_t size() const { return inner_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return inner_[i]; }
  const std::vector<MultiIndex>& indices() const { return inner_.monomials(); }
  std::optional<std::size_t> index_of(const MultiIndex& i) const { return inner_.index_of(i); }

 private:
  SymBasis inner_;
};

/// Identifies the graded block H^q (x) S^p.
struct BlockKey {
  int q = 0;
  int p = 0;
  bool valid() const { return q >= 0 && p >= 0; }
  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

/// Basis H_I e^J of H^q (x) S^p, Hermite index outer, symmetric inner.
class BlockBasis {
 public:
  BlockBasis(std::size_t n, unsigned q, unsigned p);

  std::size_t n() const { return hermite_.n(); }
  BlockKey key() const { return {static_cast<int>(hermite_.degree()), static_cast<int>(sym_.degree())}; }
  const HermiteBasis& hermite() const { return hermite_; }
  const SymBasis& sym() const { return sym_; }
  std::size_t size() const { return hermite_.size() * sym_.size(); }

  std::pair<const MultiIndex&, const MultiIndex&> pair(std::size_t i) const {
    return {hermite_[i / sym_.size()], sym_[i % sym_.size()]};
  }
  std::optional<std::size_t> index_of(const MultiIndex& i, const MultiIndex& j) const;

  /// Weights 2^{|I|} I! J!, one per pair. The common (sqrt pi)^n factor of
  /// the Gaussian measure is left out.
  const std::vector<Rational>& gram() const { return gram_; }

 private:
  HermiteBasis hermite_;
  SymBasis sym_;
  std::vector<Rational> gram_;
};

/// 2^{|I|} I! J!
Rational gram_entry(const MultiIndex& i, const MultiIndex& j);

/// Pointwise pairing of symmetric monomials under the unnormalized
/// symmetric product: J! if J = J', else 0.
Rational sym_inner(const MultiIndex& j, const MultiIndex& j2);

/// Shared immutable block, cached per (n, q, p). Thread-safe.
std::shared_ptr<const BlockBasis> build_block(std::size_t n, unsigned q, unsigned p);

inline std::size_t block_dim(std::size_t n, BlockKey key) {
  if (!key.valid()) return 0;
  return sym_rank(n, static_cast<unsigned>(key.q)) * sym_rank(n, static_cast<unsigned>(key.p));
}

}  // namespace killing
