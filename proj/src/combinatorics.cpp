#include "killing/combinatorics.hpp"

#include <stdexcept>

namespace killing {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

void enumerate_into(std::size_t n, unsigned remaining, std::vector<unsigned>& prefix,
                    std::vector<MultiIndex>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned first = remaining + 1; first-- > 0;) {
    prefix.push_back(first);
    enumerate_into(n, remaining - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_indices(std::size_t n, unsigned q) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  std::vector<MultiIndex> out;
  out.reserve(sym_rank(n, q));
  std::vector<unsigned> prefix;
  prefix.reserve(n);
  enumerate_into(n, q, prefix, out);
  return out;
}

std::uint64_t sym_rank(std::size_t n, unsigned p) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  return binomial(n + p - 1, p);
}

std::uint64_t killing_bound(std::size_t n, unsigned p) {
  if (n == 0 || p == 0) throw std::invalid_argument("killing_bound needs n >= 1, p >= 1");
  const unsigned __int128 product =
      static_cast<unsigned __int128>(binomial(n + p, p + 1)) * binomial(n + p - 1, p);
  if (product % n != 0) throw std::logic_error("killing_bound: non-integral result");
  return static_cast<std::uint64_t>(product / n);
}

std::uint64_t closed_form_K0(std::size_t n, unsigned p) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  if (p == 1) return binomial(n + 1, 2);
  if (p != 2) throw std::invalid_argument("closed form K0 is only known for p = 1, 2");
  if (n == 1) return 1;
  if (n == 2) return 3;
  const std::uint64_t product = binomial(n + 2, 3) * binomial(n + 1, 2);
  if (product % n != 0) throw std::logic_error("closed_form_K0: non-integral result");
  return product / n - n * (n + 3) / 2;
}

LemmaDims lemma_dims_closed_form(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  LemmaDims d;
  d.k11 = binomial(n, 2);
  const std::uint64_t b2 = binomial(n + 1, 2);
  const std::uint64_t b3 = binomial(n + 2, 3);
  if (n >= 2) d.k12 = n * b2 - b3 - n;
  if (n >= 3) d.k22 = b2 * b2 - n * b3 - b2;
  return d;
}

}  // namespace killing
