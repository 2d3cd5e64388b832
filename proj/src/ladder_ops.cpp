#include "killing/ladder_ops.hpp"

#include <stdexcept>
#include <tuple>
#include <vector>

#include "killing/insert_once_cache.hpp"

namespace killing {

namespace {

void check_coordinate(std::size_t k, std::size_t n) {
  if (n == 0 || k >= n) throw std::invalid_argument("coordinate index outside 0..n-1");
}

// Raising map on the monomial basis: I -> I + 1_k with coefficient 1.
SparseMatrix raising(std::size_t k, std::size_t n, unsigned degree) {
  check_coordinate(k, n);
  const SymBasis from(n, degree);
  const SymBasis to(n, degree + 1);
  SparseMatrix out(to.size(), from.size());
  for (std::size_t j = 0; j < from.size(); ++j) {
    out.add(*to.index_of(from[j].incremented(k)), j, Rational(1));
  }
  return out;
}

// Lowering map on the monomial basis: I -> i_k (I - 1_k).
SparseMatrix lowering(std::size_t k, std::size_t n, unsigned degree) {
  check_coordinate(k, n);
  if (degree == 0) throw std::invalid_argument("lowering operator needs degree >= 1");
  const SymBasis from(n, degree);
  const SymBasis to(n, degree - 1);
  SparseMatrix out(to.size(), from.size());
  for (std::size_t j = 0; j < from.size(); ++j) {
    if (auto lower = from[j].decremented(k)) out.add(*to.index_of(*lower), j, Rational(from[j][k]));
  }
  return out;
}

using FactorKey = std::tuple<int, std::size_t, std::size_t, unsigned>;
enum : int { kRaise = 0, kLower = 1 };

std::shared_ptr<const SparseMatrix> cached(int kind, std::size_t k, std::size_t n, unsigned degree) {
  static InsertOnceCache<FactorKey, SparseMatrix> cache;
  return cache.get(FactorKey{kind, k, n, degree},
                   [&] { return kind == kRaise ? raising(k, n, degree) : lowering(k, n, degree); });
}

struct Piece {
  int shift;
  SparseMatrix matrix;
};

std::set<int> hermite_shifts(HermiteLadder kind) {
  switch (kind) {
    case HermiteLadder::C: return {1};
    case HermiteLadder::A: return {-1};
    case HermiteLadder::Y: return {-1, 1};
    case HermiteLadder::D: return {-1};
  }
  return {};
}

std::vector<Piece> hermite_pieces(HermiteLadder kind, std::size_t k, std::size_t n, unsigned q) {
  std::vector<Piece> out;
  switch (kind) {
    case HermiteLadder::C:
      out.push_back({1, *cached(kRaise, k, n, q)});
      break;
    case HermiteLadder::A:
      if (q > 0) out.push_back({-1, *cached(kLower, k, n, q)});
      break;
    case HermiteLadder::Y: {
      auto y = matrix_y(k, n, q);
      if (y.lower) out.push_back({-1, std::move(*y.lower)});
      out.push_back({1, std::move(y.raise)});
      break;
    }
    case HermiteLadder::D:
      if (q > 0) out.push_back({-1, cached(kLower, k, n, q)->scaled(Rational(2))});
      break;
  }
  return out;
}

std::vector<Piece> sym_pieces(SymLadder kind, std::size_t k, std::size_t n, unsigned p) {
  if (kind == SymLadder::c) return {{1, *cached(kRaise, k, n, p)}};
  if (p == 0) return {};
  return {{-1, *cached(kLower, k, n, p)}};
}

int sym_shift(SymLadder kind) { return kind == SymLadder::c ? 1 : -1; }

}  // namespace

SparseMatrix matrix_c(std::size_t k, std::size_t n, unsigned p) { return *cached(kRaise, k, n, p); }
SparseMatrix matrix_a(std::size_t k, std::size_t n, unsigned p) { return *cached(kLower, k, n, p); }
SparseMatrix matrix_C(std::size_t k, std::size_t n, unsigned q) { return *cached(kRaise, k, n, q); }
SparseMatrix matrix_A(std::size_t k, std::size_t n, unsigned q) { return *cached(kLower, k, n, q); }

MultiplyByY matrix_y(std::size_t k, std::size_t n, unsigned q) {
  MultiplyByY out{std::nullopt, cached(kRaise, k, n, q)->scaled(Rational(1, 2))};
  if (q > 0) out.lower = *cached(kLower, k, n, q);
  return out;
}

GradedOperator hermite_op(HermiteLadder kind, std::size_t k, std::size_t n, const Domain& domain) {
  std::set<Shift> shifts;
  for (int s : hermite_shifts(kind)) shifts.insert({s, 0});
  GradedOperator out(n, domain, shifts);
  for (const auto& key : domain) {
    const auto identity = SparseMatrix::identity(sym_rank(n, key.p));
    for (auto& piece : hermite_pieces(kind, k, n, key.q)) {
      out.add_block(key, {key.q + piece.shift, key.p}, kron(piece.matrix, identity));
    }
  }
  return out;
}

GradedOperator sym_op(SymLadder kind, std::size_t k, std::size_t n, const Domain& domain) {
  GradedOperator out(n, domain, {Shift{0, sym_shift(kind)}});
  for (const auto& key : domain) {
    const auto identity = SparseMatrix::identity(sym_rank(n, key.q));
    for (auto& piece : sym_pieces(kind, k, n, key.p)) {
      out.add_block(key, {key.q, key.p + piece.shift}, kron(identity, piece.matrix));
    }
  }
  return out;
}

GradedOperator product_op(HermiteLadder left, SymLadder right, std::size_t k, std::size_t n,
                          const Domain& domain) {
  std::set<Shift> shifts;
  for (int s : hermite_shifts(left)) shifts.insert({s, sym_shift(right)});
  GradedOperator out(n, domain, shifts);
  for (const auto& key : domain) {
    const auto sp = sym_pieces(right, k, n, key.p);
    if (sp.empty()) continue;
    for (auto& hp : hermite_pieces(left, k, n, key.q)) {
      out.add_block(key, {key.q + hp.shift, key.p + sp.front().shift}, kron(hp.matrix, sp.front().matrix));
    }
  }
  return out;
}

GradedOperator composite(Part part, HermiteLadder left, SymLadder right, std::size_t n, std::size_t m,
                         const Domain& domain) {
  if (left != HermiteLadder::C && left != HermiteLadder::A) {
    throw std::invalid_argument("composite: left factor must be C or A");
  }
  if (m > n) throw std::invalid_argument("Morse index must satisfy 0 <= m <= n");
  std::set<Shift> shifts;
  for (int s : hermite_shifts(left)) shifts.insert({s, sym_shift(right)});
  GradedOperator out(n, domain, shifts);
  const std::size_t begin = part == Part::minus ? 0 : m;
  const std::size_t end = part == Part::minus ? m : n;
  for (std::size_t k = begin; k < end; ++k) out += product_op(left, right, k, n, domain);
  return out;
}

GradedOperator full_sum(HermiteLadder left, SymLadder right, std::size_t n, const Domain& domain) {
  return composite(Part::plus, left, right, n, 0, domain);
}

GradedOperator build_P(std::size_t n, std::size_t m, const Domain& domain) {
  return composite(Part::minus, HermiteLadder::C, SymLadder::a, n, m, domain) -
         composite(Part::plus, HermiteLadder::A, SymLadder::a, n, m, domain).scaled(Rational(2));
}

GradedOperator build_Q(std::size_t n, std::size_t m, const Domain& domain) {
  return composite(Part::minus, HermiteLadder::C, SymLadder::c, n, m, domain) -
         composite(Part::plus, HermiteLadder::A, SymLadder::c, n, m, domain).scaled(Rational(2));
}

GradedOperator adjoint_P_formula(std::size_t n, std::size_t m, const Domain& domain) {
  return composite(Part::minus, HermiteLadder::A, SymLadder::c, n, m, domain).scaled(Rational(2)) -
         composite(Part::plus, HermiteLadder::C, SymLadder::c, n, m, domain);
}

GradedOperator adjoint_Q_formula(std::size_t n, std::size_t m, const Domain& domain) {
  return composite(Part::minus, HermiteLadder::A, SymLadder::a, n, m, domain).scaled(Rational(2)) -
         composite(Part::plus, HermiteLadder::C, SymLadder::a, n, m, domain);
}

SparseMatrix block_sum_matrix(HermiteLadder left, SymLadder right, std::size_t n, unsigned q, unsigned p) {
  if (left != HermiteLadder::C && left != HermiteLadder::A) {
    throw std::invalid_argument("block_sum_matrix: left factor must be C or A");
  }
  const int tq = static_cast<int>(q) + (left == HermiteLadder::C ? 1 : -1);
  const int tp = static_cast<int>(p) + sym_shift(right);
  SparseMatrix out(block_dim(n, {tq, tp}), block_dim(n, {static_cast<int>(q), static_cast<int>(p)}));
  for (std::size_t k = 0; k < n; ++k) {
    const auto hp = hermite_pieces(left, k, n, q);
    const auto sp = sym_pieces(right, k, n, p);
    if (hp.empty() || sp.empty()) continue;
    out += kron(hp.front().matrix, sp.front().matrix);
  }
  return out;
}

}  // namespace killing
