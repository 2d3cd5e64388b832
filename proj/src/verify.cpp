#include "killing/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <omp.h>

#include "killing/combinatorics.hpp"
#include "killing/elimination.hpp"
#include "killing/graded_space.hpp"
#include "killing/kernel_analysis.hpp"
#include "killing/ladder_ops.hpp"
#include "killing/model_operator.hpp"

namespace killing {

namespace {

// Degree-p Gram weights of a single-factor basis.
std::vector<Rational> sym_gram(std::size_t n, unsigned p) {
  std::vector<Rational> g;
  for (const auto& j : enumerate_indices(n, p)) g.push_back(sym_inner(j, j));
  return g;
}

std::vector<Rational> hermite_gram(std::size_t n, unsigned q) {
  std::vector<Rational> g;
  for (const auto& i : enumerate_indices(n, q)) g.push_back(gram_entry(i, MultiIndex::zero(n)));
  return g;
}

std::string coord(std::size_t k) { return std::to_string(k + 1); }

Check from_report(const std::string& suite, const ModelSpec& spec, const IdentityReport& r) {
  Check c{suite, r.name, spec.n, spec.p, spec.m, spec.q_max, r.passed, r.detail};
  if (!r.passed && !r.discrepancies.empty()) {
    const auto& d = r.discrepancies.front();
    c.detail += "; first at (q=" + std::to_string(d.source.q) + ",p=" + std::to_string(d.source.p) + ")->(q=" +
                std::to_string(d.target.q) + ",p=" + std::to_string(d.target.p) +
                ") max |diff| = " + to_fraction_string(d.max_abs);
  }
  return c;
}

// Keeps the first failure reason.
void fail(Check& c, const std::string& why) {
  if (c.passed) c.detail = why;
  c.passed = false;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ccr",           "hermite-ccr",    "adjoints",     "factorization",
                                              "commutators",   "eigen-identity", "injectivity",  "psd",
                                              "closed-form"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& names = suite_names();
  return name == "all" || std::find(names.begin(), names.end(), name) != names.end();
}

Check check_sym_ccr(std::size_t n, unsigned p) {
  Check c{"ccr", "symmetric_ccr", n, p, std::nullopt, std::nullopt, true, {}};
  const SparseMatrix id = SparseMatrix::identity(sym_rank(n, p));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (matrix_c(k, n, p + 1) * matrix_c(l, n, p) != matrix_c(l, n, p + 1) * matrix_c(k, n, p)) {
        fail(c, "c_" + coord(k) + " c_" + coord(l) + " != c_" + coord(l) + " c_" + coord(k));
      }
      if (p >= 2 && matrix_a(k, n, p - 1) * matrix_a(l, n, p) != matrix_a(l, n, p - 1) * matrix_a(k, n, p)) {
        fail(c, "a_" + coord(k) + " a_" + coord(l) + " != a_" + coord(l) + " a_" + coord(k));
      }
      SparseMatrix comm = p >= 1 ? matrix_c(k, n, p - 1) * matrix_a(l, n, p) : SparseMatrix(id.rows(), id.cols());
      comm -= matrix_a(l, n, p + 1) * matrix_c(k, n, p);
      const SparseMatrix expected = k == l ? id.scaled(Rational(-1)) : SparseMatrix(id.rows(), id.cols());
      if (comm != expected) fail(c, "c_" + coord(k) + " a_" + coord(l) + " - a_" + coord(l) + " c_" + coord(k));
    }
  }
  return c;
}

Check check_hermite_ccr(std::size_t n, unsigned q) {
  Check c{"hermite-ccr", "hermite_ccr", n, std::nullopt, std::nullopt, q, true, {}};
  const SparseMatrix id = SparseMatrix::identity(sym_rank(n, q));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (matrix_C(k, n, q + 1) * matrix_C(l, n, q) != matrix_C(l, n, q + 1) * matrix_C(k, n, q)) {
        fail(c, "C_" + coord(k) + " C_" + coord(l) + " != C_" + coord(l) + " C_" + coord(k));
      }
      if (q >= 2 && matrix_A(k, n, q - 1) * matrix_A(l, n, q) != matrix_A(l, n, q - 1) * matrix_A(k, n, q)) {
        fail(c, "A_" + coord(k) + " A_" + coord(l) + " != A_" + coord(l) + " A_" + coord(k));
      }
      SparseMatrix comm = q >= 1 ? matrix_C(k, n, q - 1) * matrix_A(l, n, q) : SparseMatrix(id.rows(), id.cols());
      comm -= matrix_A(l, n, q + 1) * matrix_C(k, n, q);
      const SparseMatrix expected = k == l ? id.scaled(Rational(-1)) : SparseMatrix(id.rows(), id.cols());
      if (comm != expected) fail(c, "C_" + coord(k) + " A_" + coord(l) + " - A_" + coord(l) + " C_" + coord(k));
    }
  }
  return c;
}

Check check_ladder_adjoints(std::size_t n, unsigned p, unsigned q_max) {
  Check c{"adjoints", "ladder_adjoints", n, p, std::nullopt, q_max, true, {}};
  for (std::size_t k = 0; k < n; ++k) {
    if (p >= 1) {
      const auto adj = gram_adjoint(matrix_a(k, n, p), sym_gram(n, p), sym_gram(n, p - 1));
      if (adj != matrix_c(k, n, p - 1)) fail(c, "a_" + coord(k) + "* != c_" + coord(k));
    }
    for (unsigned q = 1; q <= q_max; ++q) {
      const auto adj = gram_adjoint(matrix_A(k, n, q), hermite_gram(n, q), hermite_gram(n, q - 1));
      if (adj != matrix_C(k, n, q - 1).scaled(Rational(1, 2))) {
        fail(c, "A_" + coord(k) + "* != C_" + coord(k) + "/2 on H^" + std::to_string(q));
      }
    }
  }
  return c;
}

Check check_eigen_identity(std::size_t n, unsigned p, unsigned q) {
  Check c{"eigen-identity", "CaAc-AcCa", n, p, 0, q, true, {}};
  const std::size_t dim = block_dim(n, {static_cast<int>(q), static_cast<int>(p)});
  SparseMatrix lhs(dim, dim);
  if (q >= 1) {
    lhs += block_sum_matrix(HermiteLadder::C, SymLadder::a, n, q - 1, p + 1) *
           block_sum_matrix(HermiteLadder::A, SymLadder::c, n, q, p);
  }
  if (p >= 1) {
    lhs -= block_sum_matrix(HermiteLadder::A, SymLadder::c, n, q + 1, p - 1) *
           block_sum_matrix(HermiteLadder::C, SymLadder::a, n, q, p);
  }
  const SparseMatrix expected =
      SparseMatrix::identity(dim).scaled(Rational(static_cast<long>(q) - static_cast<long>(p)));
  if (lhs != expected) fail(c, "not (q-p) Id");
  return c;
}

Check check_injectivity(std::size_t n, unsigned p, unsigned q) {
  Check c{"injectivity", "Ac/Ca injective", n, p, 0, q, true, {}};
  if (q > p) {
    const auto ac = block_sum_matrix(HermiteLadder::A, SymLadder::c, n, q, p);
    if (rank(ac) != ac.cols()) fail(c, "Ac not injective although q > p");
  } else if (q < p) {
    const auto ca = block_sum_matrix(HermiteLadder::C, SymLadder::a, n, q, p);
    if (rank(ca) != ca.cols()) fail(c, "Ca not injective although q < p");
  } else {
    c.detail = "q = p: no claim";
  }
  return c;
}

Check check_closed_form(std::size_t n) {
  Check c{"closed-form", "K_total_m0 vs closed form", n, std::nullopt, 0, std::nullopt, true, {}};
  for (unsigned p : {1u, 2u}) {
    const std::size_t computed = K_total_m0(n, p).total;
    const std::size_t expected = closed_form_K0(n, p);
    if (computed != expected) {
      fail(c, "p=" + std::to_string(p) + ": nullspace " + std::to_string(computed) + " vs closed form " +
                  std::to_string(expected));
    }
  }
  const auto dims = lemma_dims(n);
  if (!dims.agree()) fail(c, "lemma dimensions disagree with nullspace");
  return c;
}

std::vector<Check> run_suites(const VerifyRequest& request, int jobs) {
  std::vector<std::string> suites;
  for (const auto& s : request.suites) {
    if (!is_suite_name(s)) throw std::invalid_argument("unknown suite: " + s);
    if (s == "all") {
      suites = suite_names();
      break;
    }
    if (std::find(suites.begin(), suites.end(), s) == suites.end()) suites.push_back(s);
  }
  if (suites.empty() || request.ns.empty()) throw std::invalid_argument("verify needs a suite and an n range");
  const std::vector<unsigned> ps = request.ps.empty() ? std::vector<unsigned>{0, 1, 2} : request.ps;
  const unsigned q_max = request.q_max;

  std::vector<std::function<std::vector<Check>()>> tasks;
  auto ms_for = [&](std::size_t n) {
    std::vector<std::size_t> ms;
    if (request.ms.empty()) {
      for (std::size_t m = 0; m <= n; ++m) ms.push_back(m);
    } else {
      for (std::size_t m : request.ms) {
        if (m <= n) ms.push_back(m);
      }
    }
    return ms;
  };
  auto model_task = [&](const std::string& suite, ModelSpec spec) {
    tasks.push_back([suite, spec] {
      std::vector<Check> out;
      if (suite == "adjoints") out.push_back(from_report(suite, spec, verify_adjoint_formulas(spec)));
      if (suite == "factorization") {
        out.push_back(from_report(suite, spec, verify_factorization(spec)));
        out.push_back(from_report(suite, spec, verify_self_adjoint(spec)));
        out.push_back(from_report(suite, spec, verify_degree_shifts(spec)));
      }
      if (suite == "commutators") out.push_back(from_report(suite, spec, verify_commutator_QQ(spec)));
      if (suite == "psd") out.push_back(from_report(suite, spec, verify_V_psd(spec)));
      return out;
    });
  };

  for (const auto& suite : suites) {
    for (std::size_t n : request.ns) {
      if (n == 0) throw std::invalid_argument("dimension n must be >= 1");
      if (suite == "closed-form") {
        tasks.push_back([n] { return std::vector<Check>{check_closed_form(n)}; });
        continue;
      }
      if (suite == "hermite-ccr") {
        for (unsigned q = 0; q <= q_max; ++q) tasks.push_back([n, q] { return std::vector<Check>{check_hermite_ccr(n, q)}; });
        continue;
      }
      for (unsigned p : ps) {
        if (suite == "ccr") {
          tasks.push_back([n, p] { return std::vector<Check>{check_sym_ccr(n, p)}; });
        } else if (suite == "eigen-identity" || suite == "injectivity") {
          for (unsigned q = 0; q <= q_max; ++q) {
            if (suite == "eigen-identity") {
              tasks.push_back([n, p, q] { return std::vector<Check>{check_eigen_identity(n, p, q)}; });
            } else {
              tasks.push_back([n, p, q] { return std::vector<Check>{check_injectivity(n, p, q)}; });
            }
          }
        } else {
          if (suite == "adjoints") {
            tasks.push_back([n, p, q_max] { return std::vector<Check>{check_ladder_adjoints(n, p, q_max)}; });
          }
          for (std::size_t m : ms_for(n)) model_task(suite, ModelSpec{n, p, m, q_max});
        }
      }
    }
  }

  std::vector<std::vector<Check>> results(tasks.size());
  const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(jobs, 1))
  for (long i = 0; i < count; ++i) results[i] = tasks[i]();
  std::vector<Check> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace killing
