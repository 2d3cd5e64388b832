#pragma once

#include <cstdint>
#include <vector>

#include "killing/multi_index.hpp"

namespace killing {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// All I with |I| = q over n coordinates, graded lexicographic with the
/// largest first component first: (2,0), (1,1), (0,2).
std::vector<MultiIndex> enumerate_indices(std::size_t n, unsigned q);

/// Rank of Sym^p on R^n: C(n+p-1, p).
std::uint64_t sym_rank(std::size_t n, unsigned p);

/// Classical upper bound on the dimension of symmetric Killing p-tensors,
/// (1/n) C(n+p, p+1) C(n+p-1, p). Throws std::logic_error if the division
/// is not exact.
std::uint64_t killing_bound(std::size_t n, unsigned p);

/// Closed-form kernel dimension of the index-zero model operator for p = 1, 2.
/// Throws std::invalid_argument for any other p.
std::uint64_t closed_form_K0(std::size_t n, unsigned p);

/// Closed forms for dim K^{1,1}, dim K^{1,2}, dim K^{2,2}.
struct LemmaDims {
  std::uint64_t k11 = 0;
  std::uint64_t k12 = 0;
  std::uint64_t k22 = 0;
};
LemmaDims lemma_dims_closed_form(std::size_t n);

}  // namespace killing
