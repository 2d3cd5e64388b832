#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "killing/combinatorics.hpp"
#include "killing/elimination.hpp"
#include "killing/model_operator.hpp"

namespace killing {

enum class KernelStatus { exact, lower_bound };
std::string to_string(KernelStatus status);
KernelStatus parse_status(const std::string& text);

struct BlockKernelDim {
  unsigned q = 0;
  std::size_t dim = 0;
};

/// Kernel dimension of the model operator with provenance.
///
/// exact: the value is the full kernel dimension. That holds for m = 0
/// once every degree q <= p is included (the kernel splits over those
/// blocks), and when m >= p or m = n (the kernel is known to vanish).
/// lower_bound: the value counts polynomial kernel elements of Hermite
/// degree <= q_max only.
struct KernelReport {
  ModelSpec spec;
  std::vector<BlockKernelDim> per_block;  // filled for m = 0
  std::size_t total = 0;
  KernelStatus status = KernelStatus::lower_bound;

  /// Optional basis; rows follow `layout` blocks in order.
  std::optional<KernelBasis> basis;
  Domain layout;

  bool exact() const { return status == KernelStatus::exact; }
  bool lower_bound() const { return status == KernelStatus::lower_bound; }
};

struct KernelOptions {
  int jobs = 1;
  bool with_basis = false;
};

struct BlockKernel {
  std::size_t dim = 0;
  KernelBasis basis;
};

/// K^{q,p} = ker Aa intersect ker Ac on H^q (x) S^p.
BlockKernel kernel_block_m0(std::size_t n, unsigned p, unsigned q);

/// Sum of K^{q,p} over q <= p. Always exact.
KernelReport K_total_m0(std::size_t n, unsigned p, const KernelOptions& options = {});

/// Default Hermite truncation for the explorer: 2p + 2.
unsigned default_q_max(unsigned p);

/// {beta in sum_{q <= q_max} H^q (x) S^p : P beta = 0, Q beta = 0}.
KernelReport bounded_kernel(std::size_t n, unsigned p, std::size_t m, unsigned q_max,
                            const KernelOptions& options = {});

/// Serial reference for bounded_kernel: one elimination over the whole
/// stacked matrix without splitting it into components.
std::size_t bounded_kernel_dim_serial(std::size_t n, unsigned p, std::size_t m, unsigned q_max);

/// The stacked matrix [P; Q] on the blocks q <= q_max.
SparseMatrix stacked_PQ(std::size_t n, unsigned p, std::size_t m, unsigned q_max);

/// u_kl = H_k e^k e^l - H_l e^k e^k in H^1 (x) S^2 (0-based, k != l).
SparseVector special_vector_L12(std::size_t n, std::size_t k, std::size_t l);

enum class SpecialKind { u, v, w };
/// Vectors of H^2 (x) S^2 annihilated by Ac:
///   u(k,l)     = 2 H_kl e^kl - H_ll e^kk - H_kk e^ll
///   v(k,l,j)   = H_kk e^lj - H_kl e^kj - H_kj e^kl + H_lj e^kk
///   w(i,j,k,l) = H_ij e^kl - 2 H_ik e^jl + H_il e^jk + H_jk e^il - 2 H_jl e^ik + H_kl e^ij
/// Indices must be distinct and < n; throws std::invalid_argument otherwise.
SparseVector special_vector_L22(std::size_t n, SpecialKind kind, const std::vector<std::size_t>& indices);

/// Every u, v, w vector over all admissible index tuples.
std::vector<SparseVector> all_special_vectors_L22(std::size_t n);

struct LemmaDimsReport {
  LemmaDims closed_form;
  LemmaDims computed;
  bool agree() const {
    return closed_form.k11 == computed.k11 && closed_form.k12 == computed.k12 && closed_form.k22 == computed.k22;
  }
};
LemmaDimsReport lemma_dims(std::size_t n);

struct TableRequest {
  std::vector<std::size_t> ns;
  std::vector<unsigned> ps;
  /// Empty means every m in 0..n.
  std::vector<std::size_t> ms;
  /// Empty means default_q_max(p).
  std::optional<unsigned> q_max;
};

struct TableRow {
  std::size_t n = 0;
  unsigned p = 0;
  std::size_t m = 0;
  std::optional<unsigned> q_max;  // absent when the value does not depend on a truncation
  std::size_t dim = 0;
  KernelStatus status = KernelStatus::exact;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Cells in (n, p, m) order; computed on up to `jobs` threads. The result
/// does not depend on `jobs`.
std::vector<TableRow> generate_table(const TableRequest& request, int jobs = 1);

/// Same table computed one cell at a time through the serial reference
/// elimination.
std::vector<TableRow> generate_table_serial(const TableRequest& request);

}  // namespace killing
