#pragma once
// Independent reference computations used only by the tests. Nothing here
// goes through the ladder-operator matrices of the library.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "killing/multi_index.hpp"
#include "killing/rational.hpp"
#include "killing/sparse_matrix.hpp"

namespace oracle {

using killing::MultiIndex;
using killing::Rational;

/// Polynomial in y_1..y_n: exponent vector -> coefficient.
using Poly = std::map<std::vector<unsigned>, Rational>;

inline void add_to(Poly& p, const std::vector<unsigned>& e, const Rational& c) {
  if (c == 0) return;
  auto& slot = p[e];
  slot += c;
  if (slot == 0) p.erase(e);
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_to(out, e, ca * cb);
    }
  }
  return out;
}

/// Physicists' Hermite polynomial in variable `var` of n, from
/// H_{k+1} = 2y H_k - 2k H_{k-1}.
inline Poly hermite_1d(std::size_t n, std::size_t var, unsigned degree) {
  std::vector<unsigned> zero(n, 0);
  Poly prev{{zero, Rational(1)}};
  if (degree == 0) return prev;
  auto e1 = zero;
  e1[var] = 1;
  Poly cur{{e1, Rational(2)}};
  for (unsigned k = 1; k < degree; ++k) {
    Poly next;
    for (const auto& [e, c] : cur) {
      auto up = e;
      ++up[var];
      add_to(next, up, 2 * c);
    }
    for (const auto& [e, c] : prev) add_to(next, e, -2 * Rational(k) * c);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline Poly hermite(const MultiIndex& index) {
  const std::size_t n = index.dimension();
  Poly out{{std::vector<unsigned>(n, 0), Rational(1)}};
  for (std::size_t k = 0; k < n; ++k) out = multiply(out, hermite_1d(n, k, index[k]));
  return out;
}

inline Poly scale(const Poly& p, const Rational& c) {
  Poly out;
  for (const auto& [e, v] : p) add_to(out, e, v * c);
  return out;
}

inline Poly plus(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [e, v] : b) add_to(out, e, v);
  return out;
}

inline Poly times_variable(const Poly& p, std::size_t k) {
  Poly out;
  for (const auto& [e, v] : p) {
    auto up = e;
    ++up[k];
    add_to(out, up, v);
  }
  return out;
}

inline Poly derivative(const Poly& p, std::size_t k) {
  Poly out;
  for (const auto& [e, v] : p) {
    if (e[k] == 0) continue;
    auto down = e;
    --down[k];
    add_to(out, down, v * e[k]);
  }
  return out;
}

/// (1 / sqrt(pi)) * integral of y^d exp(-y^2) over R: (d-1)!! / 2^{d/2} for even d.
inline Rational gaussian_moment(unsigned d) {
  if (d % 2 == 1) return 0;
  Rational m = 1;
  for (unsigned j = 1; j < d; j += 2) m *= Rational(j, 2);
  return m;
}

/// (1 / sqrt(pi)^n) * integral of f g exp(-|y|^2).
inline Rational gaussian_pairing(const Poly& f, const Poly& g) {
  Rational total = 0;
  for (const auto& [ef, cf] : f) {
    for (const auto& [eg, cg] : g) {
      Rational term = cf * cg;
      for (std::size_t i = 0; i < ef.size() && term != 0; ++i) term *= gaussian_moment(ef[i] + eg[i]);
      total += term;
    }
  }
  return total;
}

/// Writes the symmetric monomial e^J as its word (1 1 ... 2 ...), then sums
/// Kronecker pairings over every permutation of the second word.
inline Rational sym_inner_permutations(const MultiIndex& j, const MultiIndex& j2) {
  auto word = [](const MultiIndex& m) {
    std::vector<std::size_t> w;
    for (std::size_t k = 0; k < m.dimension(); ++k) w.insert(w.end(), m[k], k);
    return w;
  };
  const auto a = word(j);
  const auto b = word(j2);
  if (a.size() != b.size()) return 0;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    bool match = true;
    for (std::size_t i = 0; i < a.size() && match; ++i) match = a[i] == b[perm[i]];
    count += match;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Dense textbook row reduction.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t dense_rank(const killing::SparseMatrix& a) { return dense_rank(a.to_dense()); }

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
