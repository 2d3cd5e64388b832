#include "killing/kernel_analysis.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include <omp.h>

#include "killing/ladder_ops.hpp"

namespace killing {

namespace {

int as_int(unsigned v) { return static_cast<int>(v); }

Domain pq_domain(unsigned p, unsigned q_max) { return block_range(as_int(q_max), {as_int(p)}); }

MultiIndex pair_index(std::size_t n, std::size_t a, std::size_t b) {
  return MultiIndex::unit(n, a) + MultiIndex::unit(n, b);
}

SparseVector to_vector(const std::vector<std::pair<std::size_t, Rational>>& terms) {
  SparseMatrix acc(terms.empty() ? 0 : std::max_element(terms.begin(), terms.end())->first + 1, 1);
  for (const auto& [i, v] : terms) acc.add(i, 0, v);
  return SparseVector(acc.column(0).begin(), acc.column(0).end());
}

void require_distinct(std::size_t n, const std::vector<std::size_t>& idx, std::size_t count) {
  if (idx.size() != count) throw std::invalid_argument("wrong number of indices for special vector");
  std::set<std::size_t> seen(idx.begin(), idx.end());
  if (seen.size() != idx.size()) throw std::invalid_argument("special vector indices must be distinct");
  if (*seen.rbegin() >= n) throw std::invalid_argument("special vector index outside 0..n-1");
}

KernelStatus bounded_status(std::size_t n, unsigned p, std::size_t m, unsigned q_max) {
  if (m == 0 && q_max >= p) return KernelStatus::exact;
  if (m >= p || m == n) return KernelStatus::exact;
  return KernelStatus::lower_bound;
}

TableRow compute_cell(std::size_t n, unsigned p, std::size_t m, unsigned q_max, bool serial) {
  TableRow row{n, p, m, std::nullopt, 0, KernelStatus::exact};
  if (m == 0) {
    if (serial) {
      for (unsigned q = 0; q <= p; ++q) {
        const SparseMatrix aa = block_sum_matrix(HermiteLadder::A, SymLadder::a, n, q, p);
        const SparseMatrix ac = block_sum_matrix(HermiteLadder::A, SymLadder::c, n, q, p);
        const std::array parts{aa, ac};
        row.dim += aa.cols() - rank(vstack(parts));
      }
    } else {
      row.dim = K_total_m0(n, p).total;
    }
    return row;
  }
  row.q_max = q_max;
  row.status = bounded_status(n, p, m, q_max);
  row.dim = serial ? bounded_kernel_dim_serial(n, p, m, q_max) : bounded_kernel(n, p, m, q_max).total;
  return row;
}

struct Cell {
  std::size_t n;
  unsigned p;
  std::size_t m;
  unsigned q_max;
};

std::vector<Cell> cells_of(const TableRequest& request) {
  if (request.ns.empty() || request.ps.empty()) throw std::invalid_argument("table ranges must be non-empty");
  std::vector<Cell> cells;
  for (std::size_t n : request.ns) {
    if (n == 0) throw std::invalid_argument("dimension n must be >= 1");
    for (unsigned p : request.ps) {
      const unsigned q_max = request.q_max.value_or(default_q_max(p));
      if (request.ms.empty()) {
        for (std::size_t m = 0; m <= n; ++m) cells.push_back({n, p, m, q_max});
      } else {
        for (std::size_t m : request.ms) {
          if (m <= n) cells.push_back({n, p, m, q_max});
        }
      }
    }
  }
  if (cells.empty()) throw std::invalid_argument("table request selects no valid (n, p, m) cell");
  return cells;
}

}  // namespace

std::string to_string(KernelStatus status) { return status == KernelStatus::exact ? "exact" : "lower_bound"; }

KernelStatus parse_status(const std::string& text) {
  if (text == "exact") return KernelStatus::exact;
  if (text == "lower_bound") return KernelStatus::lower_bound;
  throw std::invalid_argument("unknown kernel status: " + text);
}

BlockKernel kernel_block_m0(std::size_t n, unsigned p, unsigned q) {
  const std::array parts{block_sum_matrix(HermiteLadder::A, SymLadder::a, n, q, p),
                         block_sum_matrix(HermiteLadder::A, SymLadder::c, n, q, p)};
  KernelBasis basis = nullspace(vstack(parts));
  const std::size_t dim = basis.dim();
  return {dim, std::move(basis)};
}

KernelReport K_total_m0(std::size_t n, unsigned p, const KernelOptions& options) {
  KernelReport report;
  report.spec = {n, p, 0, p};
  report.spec.validate();
  report.status = KernelStatus::exact;
  std::vector<BlockKernel> blocks(p + 1);
  const long count = static_cast<long>(p) + 1;
#pragma omp parallel for schedule(dynamic) num_threads(std::max(options.jobs, 1))
  for (long q = 0; q < count; ++q) {
    blocks[q] = kernel_block_m0(n, p, static_cast<unsigned>(q));
  }
  for (unsigned q = 0; q <= p; ++q) {
    report.per_block.push_back({q, blocks[q].dim});
    report.total += blocks[q].dim;
  }
  if (options.with_basis) {
    report.layout = pq_domain(p, p);
    std::size_t rows = 0;
    for (const auto& b : blocks) rows += b.basis.matrix.rows();
    SparseMatrix basis(rows, report.total);
    std::size_t row_offset = 0, col = 0;
    for (const auto& b : blocks) {
      for (std::size_t j = 0; j < b.basis.dim(); ++j, ++col) {
        SparseVector v;
        for (const auto& e : b.basis.matrix.column(j)) v.push_back({e.index + row_offset, e.value});
        basis.set_column(col, std::move(v));
      }
      row_offset += b.basis.matrix.rows();
    }
    report.basis = KernelBasis{std::move(basis)};
  }
  return report;
}

unsigned default_q_max(unsigned p) { return 2 * p + 2; }

SparseMatrix stacked_PQ(std::size_t n, unsigned p, std::size_t m, unsigned q_max) {
  const ModelSpec spec{n, p, m, q_max};
  spec.validate();
  const Domain domain = spec.domain();
  const SparseMatrix P = flatten(build_P(n, m, domain), domain, block_range(as_int(q_max) + 1, {as_int(p) - 1}));
  const SparseMatrix Q = flatten(build_Q(n, m, domain), domain, block_range(as_int(q_max) + 1, {as_int(p) + 1}));
  const std::array parts{P, Q};
  return vstack(parts);
}

KernelReport bounded_kernel(std::size_t n, unsigned p, std::size_t m, unsigned q_max, const KernelOptions& options) {
  KernelReport report;
  report.spec = {n, p, m, q_max};
  const SparseMatrix stacked = stacked_PQ(n, p, m, q_max);
  report.status = bounded_status(n, p, m, q_max);
  if (options.with_basis) {
    KernelBasis basis = nullspace_parallel(stacked, options.jobs);
    report.total = basis.dim();
    report.basis = std::move(basis);
    report.layout = report.spec.domain();
  } else {
    report.total = stacked.cols() - rank_parallel(stacked, options.jobs);
  }
  return report;
}

std::size_t bounded_kernel_dim_serial(std::size_t n, unsigned p, std::size_t m, unsigned q_max) {
  const SparseMatrix stacked = stacked_PQ(n, p, m, q_max);
  return stacked.cols() - rank(stacked);
}

SparseVector special_vector_L12(std::size_t n, std::size_t k, std::size_t l) {
  require_distinct(n, {k, l}, 2);
  const auto block = build_block(n, 1, 2);
  const auto hk = MultiIndex::unit(n, k);
  const auto hl = MultiIndex::unit(n, l);
  return to_vector({{*block->index_of(hk, pair_index(n, k, l)), Rational(1)},
                    {*block->index_of(hl, pair_index(n, k, k)), Rational(-1)}});
}

SparseVector special_vector_L22(std::size_t n, SpecialKind kind, const std::vector<std::size_t>& idx) {
  const auto block = build_block(n, 2, 2);
  auto at = [&](std::size_t h1, std::size_t h2, std::size_t e1, std::size_t e2) {
    return *block->index_of(pair_index(n, h1, h2), pair_index(n, e1, e2));
  };
  switch (kind) {
    case SpecialKind::u: {
      require_distinct(n, idx, 2);
      const std::size_t k = idx[0], l = idx[1];
      return to_vector({{at(k, l, k, l), Rational(2)}, {at(l, l, k, k), Rational(-1)}, {at(k, k, l, l), Rational(-1)}});
    }
    case SpecialKind::v: {
      require_distinct(n, idx, 3);
      const std::size_t k = idx[0], l = idx[1], j = idx[2];
      return to_vector({{at(k, k, l, j), Rational(1)},
                        {at(k, l, k, j), Rational(-1)},
                        {at(k, j, k, l), Rational(-1)},
                        {at(l, j, k, k), Rational(1)}});
    }
    case SpecialKind::w: {
      require_distinct(n, idx, 4);
      const std::size_t i = idx[0], j = idx[1], k = idx[2], l = idx[3];
      return to_vector({{at(i, j, k, l), Rational(1)},
                        {at(i, k, j, l), Rational(-2)},
                        {at(i, l, j, k), Rational(1)},
                        {at(j, k, i, l), Rational(1)},
                        {at(j, l, i, k), Rational(-2)},
                        {at(k, l, i, j), Rational(1)}});
    }
  }
  throw std::invalid_argument("unknown special vector kind");
}

std::vector<SparseVector> all_special_vectors_L22(std::size_t n) {
  std::vector<SparseVector> out;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) out.push_back(special_vector_L22(n, SpecialKind::u, {k, l}));
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t j = l + 1; j < n; ++j) {
        if (k != l && k != j) out.push_back(special_vector_L22(n, SpecialKind::v, {k, l, j}));
      }
    }
  }
  std::vector<std::size_t> t(4);
  for (t[0] = 0; t[0] < n; ++t[0]) {
    for (t[1] = 0; t[1] < n; ++t[1]) {
      for (t[2] = 0; t[2] < n; ++t[2]) {
        for (t[3] = 0; t[3] < n; ++t[3]) {
          if (std::set<std::size_t>(t.begin(), t.end()).size() == 4) {
            out.push_back(special_vector_L22(n, SpecialKind::w, t));
          }
        }
      }
    }
  }
  return out;
}

LemmaDimsReport lemma_dims(std::size_t n) {
  return {lemma_dims_closed_form(n),
          {kernel_block_m0(n, 1, 1).dim, kernel_block_m0(n, 2, 1).dim, kernel_block_m0(n, 2, 2).dim}};
}

std::vector<TableRow> generate_table(const TableRequest& request, int jobs) {
  const auto cells = cells_of(request);
  std::vector<TableRow> rows(cells.size());
  const long count = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(jobs, 1))
  for (long i = 0; i < count; ++i) {
    const Cell& c = cells[i];
    rows[i] = compute_cell(c.n, c.p, c.m, c.q_max, false);
  }
  return rows;
}

std::vector<TableRow> generate_table_serial(const TableRequest& request) {
  std::vector<TableRow> rows;
  for (const Cell& c : cells_of(request)) rows.push_back(compute_cell(c.n, c.p, c.m, c.q_max, true));
  return rows;
}

}  // namespace killing
