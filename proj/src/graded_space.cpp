#include "killing/graded_space.hpp"

#include "killing/insert_once_cache.hpp"

#include <tuple>

namespace killing {

SymBasis::SymBasis(std::size_t n, unsigned p) : n_(n), p_(p), monomials_(enumerate_indices(n, p)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) lookup_.emplace(monomials_[i], i);
}

std::optional<std::size_t> SymBasis::index_of(const MultiIndex& j) const {
  auto it = lookup_.find(j);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

BlockBasis::BlockBasis(std::size_t n, unsigned q, unsigned p) : hermite_(n, q), sym_(n, p) {
  gram_.reserve(size());
  for (const auto& i : hermite_.indices()) {
    for (const auto& j : sym_.monomials()) gram_.push_back(gram_entry(i, j));
  }
}

std::optional<std::size_t> BlockBasis::index_of(const MultiIndex& i, const MultiIndex& j) const {
  auto hi = hermite_.index_of(i);
  auto si = sym_.index_of(j);
  if (!hi || !si) return std::nullopt;
  return *hi * sym_.size() + *si;
}

Rational gram_entry(const MultiIndex& i, const MultiIndex& j) {
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, i.order());
  return Rational(power * factorial_of(i) * factorial_of(j));
}

Rational sym_inner(const MultiIndex& j, const MultiIndex& j2) {
  if (j != j2) return Rational(0);
  return Rational(factorial_of(j));
}

std::shared_ptr<const BlockBasis> build_block(std::size_t n, unsigned q, unsigned p) {
  static InsertOnceCache<std::tuple<std::size_t, unsigned, unsigned>, BlockBasis> cache;
  return cache.get(std::make_tuple(n, q, p), [&] { return BlockBasis(n, q, p); });
}

}  // namespace killing
