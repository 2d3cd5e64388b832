#include "killing/model_operator.hpp"

#include <stdexcept>
#include <vector>

#include "killing/ladder_ops.hpp"

namespace killing {

namespace {

int as_int(unsigned v) { return static_cast<int>(v); }

std::vector<int> degrees_around(unsigned p, int radius) {
  std::vector<int> out;
  for (int d = as_int(p) - radius; d <= as_int(p) + radius; ++d) {
    if (d >= 0) out.push_back(d);
  }
  return out;
}

IdentityReport report(std::string name, const GradedOperator& lhs, const GradedOperator& rhs, const Domain& on) {
  IdentityReport r{std::move(name), true, compare(lhs, rhs, on), {}};
  r.passed = r.discrepancies.empty();
  if (!r.passed) r.detail = std::to_string(r.discrepancies.size()) + " differing block(s)";
  return r;
}

// T_kl = a_k c_l + c_k a_l on the blocks of `domain`.
GradedOperator symmetric_pair(std::size_t k, std::size_t l, std::size_t n, const Domain& domain, int q_max,
                              unsigned p) {
  const Domain up = block_range(q_max, {as_int(p) + 1});
  GradedOperator out = compose(sym_op(SymLadder::a, k, n, up), sym_op(SymLadder::c, l, n, domain));
  if (p > 0) {
    const Domain down = block_range(q_max, {as_int(p) - 1});
    out += compose(sym_op(SymLadder::c, k, n, down), sym_op(SymLadder::a, l, n, domain));
  }
  return out;
}

}  // namespace

void ModelSpec::validate() const {
  if (n == 0) throw std::invalid_argument("dimension n must be >= 1");
  if (m > n) throw std::invalid_argument("Morse index must satisfy 0 <= m <= n");
}

Domain ModelSpec::domain() const { return block_range(as_int(q_max), {as_int(p)}); }

int morse_sign(std::size_t k, std::size_t m) { return k < m ? -1 : 1; }

GradedOperator assemble_factored(const ModelSpec& spec) {
  spec.validate();
  // P and Q raise Hermite degree by at most one, so their adjoints are
  // exact up to q_max + 1 when P and Q are known up to q_max + 2.
  const Domain work = block_range(as_int(spec.q_max) + 2, {as_int(spec.p)});
  const GradedOperator P = build_P(spec.n, spec.m, work);
  const GradedOperator Q = build_Q(spec.n, spec.m, work);
  GradedOperator k = compose(adjoint(P), P) + compose(adjoint(Q), Q);
  return k.restricted(spec.domain());
}

DirectParts assemble_direct_parts(const ModelSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  const int q_max = as_int(spec.q_max);
  const Domain domain = spec.domain();
  const Domain work = block_range(q_max + 2, {as_int(spec.p)});

  std::vector<GradedOperator> y, d;
  for (std::size_t k = 0; k < n; ++k) {
    y.push_back(hermite_op(HermiteLadder::Y, k, n, work));
    d.push_back(hermite_op(HermiteLadder::D, k, n, work));
  }
  const GradedOperator id = GradedOperator::identity(n, work);

  GradedOperator laplacian = GradedOperator::zero(n, domain);
  GradedOperator endo = GradedOperator::zero(n, domain);
  GradedOperator potential = GradedOperator::zero(n, domain);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const GradedOperator pair = symmetric_pair(k, l, n, domain, q_max, spec.p);
      const GradedOperator yy = compose(y[k], y[l]);
      // -delta_kl + y_k y_l - y_k d_l - y_l d_k + d_k d_l
      GradedOperator coeff = yy - compose(y[k], d[l]) - compose(y[l], d[k]) + compose(d[k], d[l]);
      if (k == l) coeff -= id;
      laplacian -= compose(coeff, pair);
      potential += compose(yy, pair).scaled(Rational(morse_sign(k, spec.m) * morse_sign(l, spec.m)));
      if (k == l) endo -= pair.scaled(Rational(morse_sign(k, spec.m)));
    }
  }
  return {laplacian.restricted(domain), endo.restricted(domain), potential.restricted(domain)};
}

GradedOperator assemble_direct(const ModelSpec& spec) {
  DirectParts parts = assemble_direct_parts(spec);
  return parts.weighted_laplacian + parts.endomorphism + parts.potential;
}

IdentityReport verify_factorization(const ModelSpec& spec) {
  return report("factorization", assemble_direct(spec), assemble_factored(spec), spec.domain());
}

IdentityReport verify_commutator_QQ(const ModelSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  const int q_max = as_int(spec.q_max);
  const int p = as_int(spec.p);
  const Domain domain = spec.domain();

  const GradedOperator Q = build_Q(n, spec.m, block_range(q_max + 2, {p - 1, p}));
  // Q* vanishes on degree-0 blocks, which Q never reaches.
  const GradedOperator Qs = adjoint(Q, domain);
  const GradedOperator lhs = compose(Qs, Q) - compose(Q, Qs);

  const Domain work = block_range(q_max + 1, {p});
  GradedOperator rhs = GradedOperator::identity(n, domain).scaled(Rational(2 * static_cast<long>(spec.m)));
  for (std::size_t k = 0; k < n; ++k) {
    rhs += compose(hermite_op(HermiteLadder::C, k, n, work), hermite_op(HermiteLadder::A, k, n, work))
               .scaled(Rational(2));
    if (p > 0) {
      const GradedOperator ca = compose(sym_op(SymLadder::c, k, n, block_range(q_max, {p - 1})),
                                        sym_op(SymLadder::a, k, n, domain));
      rhs += ca.scaled(Rational(2 * morse_sign(k, spec.m) * -1));
    }
  }
  return report("commutator_QQ", lhs, rhs, domain);
}

IdentityReport verify_V_psd(const ModelSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  const int q_max = as_int(spec.q_max);
  const int p = as_int(spec.p);
  const Domain work = block_range(q_max + 2, {p});

  GradedOperator F = GradedOperator::zero(n, work);
  GradedOperator R = GradedOperator::zero(n, work);
  for (std::size_t k = 0; k < n; ++k) {
    const GradedOperator yk = hermite_op(HermiteLadder::Y, k, n, block_range(q_max + 2, {p - 1}));
    F += compose(yk, sym_op(SymLadder::a, k, n, work)).scaled(Rational(morse_sign(k, spec.m)));
    const GradedOperator yk_here = hermite_op(HermiteLadder::Y, k, n, work);
    R += compose(yk_here, yk_here);
  }
  const GradedOperator rhs = compose(adjoint(F), F).scaled(Rational(2)) + R;
  return report("potential_decomposition", assemble_direct_parts(spec).potential, rhs, spec.domain());
}

IdentityReport verify_adjoint_formulas(const ModelSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  const int q_max = as_int(spec.q_max);
  const int p = as_int(spec.p);
  const Domain work = block_range(q_max + 1, {p});
  IdentityReport out{"adjoint_formulas", true, {}, {}};
  if (p > 0) {
    const Domain on = block_range(q_max, {p - 1});
    auto r = report("P", adjoint(build_P(n, spec.m, work)), adjoint_P_formula(n, spec.m, on), on);
    out.discrepancies.insert(out.discrepancies.end(), r.discrepancies.begin(), r.discrepancies.end());
  }
  const Domain on = block_range(q_max, {p + 1});
  auto r = report("Q", adjoint(build_Q(n, spec.m, work)), adjoint_Q_formula(n, spec.m, on), on);
  out.discrepancies.insert(out.discrepancies.end(), r.discrepancies.begin(), r.discrepancies.end());
  out.passed = out.discrepancies.empty();
  if (!out.passed) out.detail = std::to_string(out.discrepancies.size()) + " differing block(s)";
  return out;
}

IdentityReport verify_self_adjoint(const ModelSpec& spec) {
  ModelSpec wider = spec;
  wider.q_max += 2;
  const GradedOperator k = assemble_factored(wider);
  return report("self_adjoint", adjoint(k), k, spec.domain());
}

IdentityReport verify_degree_shifts(const ModelSpec& spec) {
  const GradedOperator k = assemble_factored(spec);
  IdentityReport out{"degree_shifts", true, {}, {}};
  for (const auto& [key, m] : k.blocks()) {
    const int dq = key.second.q - key.first.q;
    const bool allowed = key.second.p == key.first.p &&
                         (spec.m == 0 ? dq == 0 : (dq == -2 || dq == 0 || dq == 2));
    if (!allowed) out.discrepancies.push_back({key.first, key.second, m.max_abs()});
  }
  out.passed = out.discrepancies.empty();
  if (!out.passed) out.detail = "unexpected degree shift";
  return out;
}

}  // namespace killing
