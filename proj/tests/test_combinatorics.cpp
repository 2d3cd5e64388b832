#include <doctest.h>

#include <set>

#include "killing/combinatorics.hpp"
#include "killing/multi_index.hpp"
#include "oracles.hpp"

using namespace killing;

TEST_CASE("multi-index basics") {
  const MultiIndex i{2, 1};
  CHECK(i.order() == 3);
  CHECK(i.to_string() == "(2,1)");
  CHECK(i.incremented(1) == MultiIndex{2, 2});
  CHECK(*i.decremented(0) == MultiIndex{1, 1});
  CHECK_FALSE(MultiIndex{0, 3}.decremented(0).has_value());
  CHECK(MultiIndex::unit(3, 2) == MultiIndex{0, 0, 1});
  CHECK(MultiIndex::zero(3).order() == 0);
  CHECK(i + MultiIndex{0, 4} == MultiIndex{2, 5});
}

TEST_CASE("factorial of a multi-index") {
  CHECK(factorial_of(MultiIndex{0, 0, 0}) == 1);
  CHECK(factorial_of(MultiIndex{2, 1}) == 2);
  CHECK(factorial_of(MultiIndex{3, 1}) == 6);
  CHECK(factorial_of(MultiIndex{4, 0, 3}) == 144);
}

TEST_CASE("enumeration order") {
  CHECK(enumerate_indices(2, 2) == std::vector<MultiIndex>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(enumerate_indices(3, 0) == std::vector<MultiIndex>{{0, 0, 0}});
  CHECK(enumerate_indices(3, 2).size() == 6);
  CHECK(enumerate_indices(3, 2) ==
        std::vector<MultiIndex>{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
}

TEST_CASE("enumeration agrees with brute force and sym_rank") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (unsigned q = 0; q <= 6; ++q) {
      const auto list = enumerate_indices(n, q);
      CHECK(list.size() == sym_rank(n, q));
      // Strictly decreasing lexicographically, every entry of order q.
      for (std::size_t i = 0; i < list.size(); ++i) {
        CHECK(list[i].order() == q);
        CHECK(list[i].dimension() == n);
        if (i > 0) CHECK(list[i - 1] > list[i]);
      }
      // Count exponent vectors in the box [0, q]^n with the right sum.
      if (n <= 4) {
        std::size_t brute = 0;
        std::vector<unsigned> e(n, 0);
        while (true) {
          unsigned s = 0;
          for (unsigned v : e) s += v;
          brute += s == q;
          std::size_t k = 0;
          while (k < n && e[k] == q) e[k++] = 0;
          if (k == n) break;
          ++e[k];
        }
        CHECK(brute == list.size());
      }
    }
  }
}

TEST_CASE("sym_rank and binomial") {
  CHECK(sym_rank(3, 2) == 6);
  CHECK(sym_rank(7, 0) == 1);
  CHECK(sym_rank(4, 3) == 20);
  for (std::uint64_t n = 0; n <= 30; ++n) {
    for (std::uint64_t k = 0; k <= n + 1; ++k) CHECK(binomial(n, k) == oracle::choose(n, k));
  }
}

TEST_CASE("killing bound") {
  for (std::size_t n = 1; n <= 8; ++n) CHECK(killing_bound(n, 1) == oracle::choose(n + 1, 2));
  CHECK(killing_bound(3, 1) == 6);
  CHECK(killing_bound(3, 2) == 20);
  CHECK(killing_bound(1, 4) == 1);
}

TEST_CASE("closed forms") {
  CHECK(closed_form_K0(3, 1) == 6);
  CHECK(closed_form_K0(2, 2) == 3);
  CHECK(closed_form_K0(1, 2) == 1);
  CHECK(closed_form_K0(3, 2) == 11);
  CHECK(closed_form_K0(4, 2) == 36);
  CHECK(closed_form_K0(5, 2) == 85);
  CHECK_THROWS_AS(closed_form_K0(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_K0(3, 0), std::invalid_argument);

  // For n >= 3 the p = 2 value splits as dim S^2 + dim K^{1,2} + dim K^{2,2}.
  for (std::uint64_t n = 3; n <= 8; ++n) {
    const std::uint64_t s2 = oracle::choose(n + 1, 2);
    const std::uint64_t k12 = n * s2 - oracle::choose(n + 2, 3) - n;
    const std::uint64_t k22 = s2 * s2 - n * oracle::choose(n + 2, 3) - s2;
    CHECK(closed_form_K0(n, 2) == s2 + k12 + k22);
  }
}

TEST_CASE("lemma closed forms") {
  const auto d3 = lemma_dims_closed_form(3);
  CHECK(d3.k11 == 3);
  CHECK(d3.k12 == 5);
  CHECK(d3.k22 == 0);
  CHECK(lemma_dims_closed_form(4).k22 == 10);
  const auto d2 = lemma_dims_closed_form(2);
  CHECK(d2.k11 == 1);
  CHECK(d2.k12 == 0);
  CHECK(d2.k22 == 0);
  const auto d1 = lemma_dims_closed_form(1);
  CHECK(d1.k11 == 0);
  CHECK(d1.k12 == 0);
}
