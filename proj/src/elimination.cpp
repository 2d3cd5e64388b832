#include "killing/elimination.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include <omp.h>

namespace killing {

namespace {

// Rows are indexed by "position" pos = cols - 1 - col, so eliminating in
// ascending position clears the last column first. The kernel vectors read
// off afterwards then lead at their own free column in the original order.
class Eliminator {
 public:
  explicit Eliminator(const SparseMatrix& a) : cols_(a.cols()), pivots_(a.cols()) {
    const SparseMatrix at = a.transpose();
    buckets_.resize(cols_);
    rows_.reserve(at.cols());
    for (std::size_t r = 0; r < at.cols(); ++r) {
      const auto col = at.column(r);
      if (col.empty()) continue;
      SparseVector row;
      row.reserve(col.size());
      for (auto it = col.rbegin(); it != col.rend(); ++it) row.push_back({position(it->index), it->value});
      buckets_[row.front().index].push_back(rows_.size());
      rows_.push_back(std::move(row));
    }
  }

  void run() {
    for (std::size_t pos = 0; pos < cols_; ++pos) {
      auto& candidates = buckets_[pos];
      if (candidates.empty()) continue;
      // Sparsest row first, then smallest leading numerator, then lowest index.
      auto best = std::min_element(candidates.begin(), candidates.end(), [&](std::size_t x, std::size_t y) {
        const auto& rx = rows_[x];
        const auto& ry = rows_[y];
        if (rx.size() != ry.size()) return rx.size() < ry.size();
        const int c = mpz_cmpabs(rx.front().value.get_num_mpz_t(), ry.front().value.get_num_mpz_t());
        if (c != 0) return c < 0;
        return x < y;
      });
      const std::size_t pivot = *best;
      SparseVector& prow = rows_[pivot];
      const Rational lead = prow.front().value;
      if (lead != 1) {
        for (auto& e : prow) e.value /= lead;
      }
      for (std::size_t r : candidates) {
        if (r == pivot) continue;
        const Rational factor = -rows_[r].front().value;
        rows_[r] = axpy(rows_[r], factor, prow);
        if (!rows_[r].empty()) buckets_[rows_[r].front().index].push_back(r);
      }
      candidates.clear();
      pivots_[pos] = pivot;
      ++rank_;
    }
  }

  std::size_t rank() const { return rank_; }

  KernelBasis kernel() const {
    std::vector<SparseVector> vectors;
    std::vector<Rational> x(cols_);
    for (std::size_t free = 0; free < cols_; ++free) {
      if (pivots_[free]) continue;
      x[free] = 1;
      std::vector<std::size_t> support{free};
      for (std::size_t pos = free; pos-- > 0;) {
        if (!pivots_[pos]) continue;
        const SparseVector& row = rows_[*pivots_[pos]];
        Rational value;
        for (std::size_t i = 1; i < row.size(); ++i) {
          if (row[i].index > free) break;
          if (sgn(x[row[i].index]) != 0) value -= row[i].value * x[row[i].index];
        }
        if (sgn(value) != 0) {
          x[pos] = value;
          support.push_back(pos);
        }
      }
      // support holds positions in descending order, i.e. columns ascending.
      SparseVector v;
      v.reserve(support.size());
      for (std::size_t pos : support) {
        v.push_back({column(pos), x[pos]});
        x[pos] = 0;
      }
      vectors.push_back(std::move(v));
    }
    std::reverse(vectors.begin(), vectors.end());
    KernelBasis basis{SparseMatrix(cols_, vectors.size())};
    for (std::size_t i = 0; i < vectors.size(); ++i) basis.matrix.set_column(i, std::move(vectors[i]));
    return basis;
  }

 private:
  std::size_t position(std::size_t col) const { return cols_ - 1 - col; }
  std::size_t column(std::size_t pos) const { return cols_ - 1 - pos; }

  std::size_t cols_;
  std::vector<SparseVector> rows_;
  std::vector<std::vector<std::size_t>> buckets_;
  std::vector<std::optional<std::size_t>> pivots_;
  std::size_t rank_ = 0;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::size_t rank(const SparseMatrix& a) {
  Eliminator e(a);
  e.run();
  return e.rank();
}

KernelBasis nullspace(const SparseMatrix& a) {
  Eliminator e(a);
  e.run();
  return e.kernel();
}

std::vector<std::vector<std::size_t>> column_components(const SparseMatrix& a) {
  std::vector<std::size_t> parent(a.cols());
  std::iota(parent.begin(), parent.end(), 0);
  const SparseMatrix at = a.transpose();
  for (std::size_t r = 0; r < at.cols(); ++r) {
    const auto row = at.column(r);
    for (std::size_t i = 1; i < row.size(); ++i) {
      const std::size_t x = find_root(parent, row[0].index);
      const std::size_t y = find_root(parent, row[i].index);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(a.cols(), static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const std::size_t root = find_root(parent, c);
    if (slot[root] == static_cast<std::size_t>(-1)) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].push_back(c);
  }
  return groups;
}

SparseMatrix column_submatrix(const SparseMatrix& a, const std::vector<std::size_t>& columns) {
  std::vector<std::size_t> rows;
  for (std::size_t c : columns) {
    for (const auto& e : a.column(c)) rows.push_back(e.index);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  SparseMatrix out(rows.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    SparseVector col;
    for (const auto& e : a.column(columns[j])) {
      const auto r = std::lower_bound(rows.begin(), rows.end(), e.index) - rows.begin();
      col.push_back({static_cast<std::size_t>(r), e.value});
    }
    out.set_column(j, std::move(col));
  }
  return out;
}

std::size_t rank_parallel(const SparseMatrix& a, int jobs) {
  const auto groups = column_components(a);
  std::vector<std::size_t> ranks(groups.size(), 0);
  const long count = static_cast<long>(groups.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(jobs, 1))
  for (long g = 0; g < count; ++g) {
    ranks[g] = rank(column_submatrix(a, groups[g]));
  }
  return std::accumulate(ranks.begin(), ranks.end(), std::size_t{0});
}

KernelBasis nullspace_parallel(const SparseMatrix& a, int jobs) {
  const auto groups = column_components(a);
  std::vector<KernelBasis> parts(groups.size());
  const long count = static_cast<long>(groups.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(jobs, 1))
  for (long g = 0; g < count; ++g) {
    parts[g] = nullspace(column_submatrix(a, groups[g]));
  }
  // Supports are disjoint, so the union sorted by leading column is again
  // the canonical basis.
  std::vector<SparseVector> vectors;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& m = parts[g].matrix;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      SparseVector v;
      for (const auto& e : m.column(j)) v.push_back({groups[g][e.index], e.value});
      vectors.push_back(std::move(v));
    }
  }
  std::sort(vectors.begin(), vectors.end(),
            [](const SparseVector& x, const SparseVector& y) { return x.front().index < y.front().index; });
  KernelBasis basis{SparseMatrix(a.cols(), vectors.size())};
  for (std::size_t i = 0; i < vectors.size(); ++i) basis.matrix.set_column(i, std::move(vectors[i]));
  return basis;
}

}  // namespace killing
