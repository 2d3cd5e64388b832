#include <doctest.h>

#include <random>

#include "killing/elimination.hpp"
#include "killing/graded_space.hpp"
#include "killing/ladder_ops.hpp"
#include "killing/model_operator.hpp"
#include "oracles.hpp"

using namespace killing;

namespace {

Domain with_margin(const ModelSpec& spec, int extra) { return block_range(static_cast<int>(spec.q_max) + extra, {static_cast<int>(spec.p)}); }

// <x, y> under the block Gram weights, for vectors laid out over `layout`.
Rational pairing(const SparseVector& x, const SparseVector& y, const Domain& layout, std::size_t n) {
  std::vector<Rational> weights;
  for (const auto& key : layout) {
    const auto b = build_block(n, key.q, key.p);
    weights.insert(weights.end(), b->gram().begin(), b->gram().end());
  }
  Rational s = 0;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].index < y[j].index) {
      ++i;
    } else if (y[j].index < x[i].index) {
      ++j;
    } else {
      s += x[i].value * y[j].value * weights[x[i].index];
      ++i;
      ++j;
    }
  }
  return s;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS((ModelSpec{0, 1, 0, 2}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ModelSpec{2, 1, 3, 2}.validate()), std::invalid_argument);
  CHECK(morse_sign(0, 1) == -1);
  CHECK(morse_sign(1, 1) == 1);
  CHECK(morse_sign(0, 0) == 1);
  CHECK(ModelSpec{2, 1, 0, 3}.domain() == block_range(3, {1}));
}

TEST_CASE("one dimension, degree zero: K_w = 2q on H^q") {
  // Only Q = -2 Ac contributes, and Q*Q = 2 Ca Ac is 2q on H^q (x) S^0.
  const ModelSpec spec{1, 0, 0, 5};
  const auto k = assemble_factored(spec);
  for (int q = 0; q <= 5; ++q) {
    const auto* blk = k.block({q, 0}, {q, 0});
    if (q == 0) {
      CHECK(blk == nullptr);
    } else {
      REQUIRE(blk != nullptr);
      CHECK(*blk == SparseMatrix::identity(1).scaled(2 * q));
    }
  }
  CHECK(k == assemble_direct(spec));
}

TEST_CASE("constants are in the kernel at index zero") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (unsigned p = 0; p <= 3; ++p) {
      const auto k = assemble_factored({n, p, 0, 2});
      for (const auto& [key, m] : k.blocks()) CHECK(key.first.q != 0);
    }
  }
}

TEST_CASE("index equal to dimension: no kernel on the truncated domain") {
  const ModelSpec spec{1, 1, 1, 2};
  const auto k = assemble_factored(spec);
  const Domain targets = block_range(4, {1});
  const auto mat = flatten(k, spec.domain(), targets);
  CHECK(rank(mat) == mat.cols());
}

TEST_CASE("endomorphism term at index zero") {
  // On S^1 with n = 2: -sum_k (a_k c_k + c_k a_k) = -(n + 2p) = -4.
  const ModelSpec spec{2, 1, 0, 2};
  const auto parts = assemble_direct_parts(spec);
  CHECK(parts.endomorphism == GradedOperator::identity(2, spec.domain()).scaled(-4));
}

TEST_CASE("potential vanishes at the origin") {
  // V applied to H_0 e^J is a polynomial in y without constant term.
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      const ModelSpec spec{n, 2, m, 0};
      const auto parts = assemble_direct_parts(spec);
      const auto sym = build_block(n, 0, 2);
      for (std::size_t col = 0; col < sym->size(); ++col) {
        // Constant term of sum over target blocks of coeff * H_I(y).
        std::map<std::size_t, Rational> constant;  // per symmetric index
        for (const auto& [key, blk] : parts.potential.blocks()) {
          const auto dst = build_block(n, key.second.q, key.second.p);
          for (const auto& e : blk.column(col)) {
            const auto [h, s] = dst->pair(e.index);
            const auto poly = oracle::hermite(h);
            const auto it = poly.find(std::vector<unsigned>(n, 0));
            if (it != poly.end()) constant[*dst->sym().index_of(s)] += e.value * it->second;
          }
        }
        for (const auto& [idx, v] : constant) CHECK(v == 0);
      }
    }
  }
}

TEST_CASE("multiplication by |y|^2 on constants") {
  // y_k^2 H_0 = H_0 / 2 + H_{2 e_k} / 4.
  const std::size_t n = 3;
  const Domain d = block_range(2, {0});
  GradedOperator r = GradedOperator::zero(n, d);
  for (std::size_t k = 0; k < n; ++k) {
    const auto y = hermite_op(HermiteLadder::Y, k, n, block_range(3, {0}));
    r += compose(y, y).restricted(d);
  }
  CHECK(*r.block({0, 0}, {0, 0}) == SparseMatrix::from_dense({{Rational(3, 2)}}));
  const auto* up = r.block({0, 0}, {2, 0});
  REQUIRE(up != nullptr);
  const auto h2 = build_block(n, 2, 0);
  for (std::size_t k = 0; k < n; ++k) {
    MultiIndex twice = MultiIndex::zero(n).incremented(k).incremented(k);
    CHECK(up->at(*h2->index_of(twice, MultiIndex::zero(n)), 0) == Rational(1, 4));
  }
  CHECK(up->nnz() == n);
}

TEST_CASE("direct and factored assemblies agree") {
  CHECK(assemble_direct({2, 2, 1, 3}) == assemble_factored({2, 2, 1, 3}));
  CHECK(verify_factorization({2, 1, 0, 4}).passed);
  CHECK(verify_factorization({3, 2, 2, 3}).passed);
  CHECK(verify_factorization({1, 1, 1, 4}).passed);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (unsigned p = 0; p <= 2; ++p) {
      for (std::size_t m = 0; m <= n; ++m) {
        const ModelSpec spec{n, p, m, 3};
        CHECK(verify_factorization(spec).passed);
        CHECK(verify_self_adjoint(spec).passed);
        CHECK(verify_degree_shifts(spec).passed);
        CHECK(verify_adjoint_formulas(spec).passed);
        CHECK(verify_commutator_QQ(spec).passed);
        CHECK(verify_V_psd(spec).passed);
      }
    }
  }
}

TEST_CASE("identity reports with small cases") {
  CHECK(verify_V_psd({1, 1, 0, 3}).passed);
  CHECK(verify_V_psd({2, 1, 1, 3}).passed);
  CHECK(verify_commutator_QQ({2, 0, 0, 0}).passed);
  CHECK(verify_commutator_QQ({3, 0, 3, 0}).passed);
  const auto r = verify_commutator_QQ({2, 2, 2, 3});
  CHECK(r.passed);
  CHECK(r.discrepancies.empty());
  CHECK(r.name == "commutator_QQ");
}

TEST_CASE("commutator eigenvalue at index zero") {
  // Q*Q - QQ* restricted to H^q (x) S^p is 2(q - p) at m = 0.
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int p = 0; p <= 2; ++p) {
      const auto Q = build_Q(n, 0, block_range(5, {p - 1, p}));
      const Domain domain = block_range(3, {p});
      const auto Qs = adjoint(Q, domain);
      const auto lhs = (compose(Qs, Q) - compose(Q, Qs)).restricted(domain);
      for (int q = 0; q <= 3; ++q) {
        const std::size_t dim = block_dim(n, {q, p});
        const auto* blk = lhs.block({q, p}, {q, p});
        if (q == p) {
          CHECK(blk == nullptr);
        } else {
          REQUIRE(blk != nullptr);
          CHECK(*blk == SparseMatrix::identity(dim).scaled(2 * (q - p)));
        }
      }
    }
  }
}

TEST_CASE("K_w is positive semi-definite through P and Q") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-4, 4);
  for (std::size_t m = 0; m <= 2; ++m) {
    const ModelSpec spec{2, 2, m, 3};
    const auto k = assemble_factored(spec);
    const Domain wide = with_margin(spec, 2);
    const Domain domain = spec.domain();
    const auto kmat = flatten(k, domain, wide);
    const auto pmat = flatten(build_P(2, m, domain), domain, block_range(4, {1}));
    const auto qmat = flatten(build_Q(2, m, domain), domain, block_range(4, {3}));
    for (int trial = 0; trial < 10; ++trial) {
      SparseVector v;
      for (std::size_t i = 0; i < kmat.cols(); ++i) {
        if (const int c = num(rng); c != 0) v.push_back({i, Rational(c)});
      }
      // Domain blocks are a prefix of `wide`, so v lives in both layouts.
      const Rational kvv = pairing(killing::apply(kmat, v), v, wide, 2);
      const auto pv = killing::apply(pmat, v);
      const auto qv = killing::apply(qmat, v);
      const Rational norms = pairing(pv, pv, block_range(4, {1}), 2) + pairing(qv, qv, block_range(4, {3}), 2);
      CHECK(kvv == norms);
      CHECK(kvv >= 0);
    }
  }
}

TEST_CASE("index zero preserves every block") {
  const auto k = assemble_factored({3, 2, 0, 4});
  for (const auto& [key, m] : k.blocks()) CHECK(key.first == key.second);
}

TEST_CASE("restricting outside the exact domain throws") {
  const auto k = assemble_factored({2, 1, 1, 2});
  CHECK_THROWS_AS(k.restricted(block_range(3, {1})), std::logic_error);
  CHECK_THROWS_AS(compare(k, k, block_range(3, {1})), std::logic_error);
}
