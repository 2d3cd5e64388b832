#include "killing/graded_operator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace killing {

namespace {

std::string describe(BlockKey key) {
  return "(q=" + std::to_string(key.q) + ", p=" + std::to_string(key.p) + ")";
}

}  // namespace

Domain block_range(int q_max, const std::vector<int>& ps) {
  Domain out;
  for (int p : ps) {
    if (p < 0) continue;
    for (int q = 0; q <= q_max; ++q) out.insert({q, p});
  }
  return out;
}

Domain block_range(int q_max, std::initializer_list<int> ps) {
  return block_range(q_max, std::vector<int>(ps));
}

GradedOperator::GradedOperator(std::size_t n, Domain domain, std::set<Shift> shifts)
    : n_(n), domain_(std::move(domain)), shifts_(std::move(shifts)) {
  for (const auto& key : domain_) {
    if (!key.valid()) throw std::invalid_argument("domain contains invalid block " + describe(key));
  }
}

GradedOperator GradedOperator::identity(std::size_t n, const Domain& domain) {
  GradedOperator out(n, domain, {Shift{0, 0}});
  for (const auto& key : domain) out.blocks_.emplace(std::pair{key, key}, SparseMatrix::identity(block_dim(n, key)));
  return out;
}

GradedOperator GradedOperator::zero(std::size_t n, const Domain& domain) {
  return GradedOperator(n, domain, {});
}

const SparseMatrix* GradedOperator::block(BlockKey source, BlockKey target) const {
  auto it = blocks_.find({source, target});
  return it == blocks_.end() ? nullptr : &it->second;
}

void GradedOperator::add_block(BlockKey source, BlockKey target, const SparseMatrix& m) {
  if (!domain_.contains(source)) throw std::invalid_argument("source block outside domain " + describe(source));
  if (!target.valid()) throw std::invalid_argument("invalid target block " + describe(target));
  if (!shifts_.contains(Shift{target.q - source.q, target.p - source.p})) {
    throw std::invalid_argument("undeclared shift " + describe(source) + " -> " + describe(target));
  }
  if (m.cols() != block_dim(n_, source) || m.rows() != block_dim(n_, target)) {
    throw std::invalid_argument("block dimensions do not match " + describe(source) + " -> " + describe(target));
  }
  if (m.is_zero()) return;
  auto [it, inserted] = blocks_.try_emplace({source, target}, m);
  if (!inserted) {
    it->second += m;
    if (it->second.is_zero()) blocks_.erase(it);
  }
}

std::vector<BlockKey> GradedOperator::targets(BlockKey source) const {
  std::vector<BlockKey> out;
  for (const auto& s : shifts_) {
    const BlockKey t = source + s;
    if (t.valid()) out.push_back(t);
  }
  return out;
}

GradedOperator GradedOperator::restricted(const Domain& keep) const {
  for (const auto& key : keep) {
    if (!domain_.contains(key)) {
      throw std::logic_error("restriction requests block " + describe(key) + " outside the exact domain");
    }
  }
  GradedOperator out(n_, keep, shifts_);
  for (const auto& [key, m] : blocks_) {
    if (keep.contains(key.first)) out.blocks_.emplace(key, m);
  }
  return out;
}

GradedOperator GradedOperator::scaled(const Rational& factor) const {
  GradedOperator out(n_, domain_, shifts_);
  if (sgn(factor) == 0) return out;
  for (const auto& [key, m] : blocks_) out.blocks_.emplace(key, m.scaled(factor));
  return out;
}

GradedOperator& GradedOperator::operator+=(const GradedOperator& other) {
  if (other.n_ != n_) throw std::invalid_argument("operator sum: dimension mismatch");
  Domain common;
  std::set_intersection(domain_.begin(), domain_.end(), other.domain_.begin(), other.domain_.end(),
                        std::inserter(common, common.end()));
  std::erase_if(blocks_, [&](const auto& kv) { return !common.contains(kv.first.first); });
  domain_ = std::move(common);
  shifts_.insert(other.shifts_.begin(), other.shifts_.end());
  for (const auto& [key, m] : other.blocks_) {
    if (domain_.contains(key.first)) add_block(key.first, key.second, m);
  }
  return *this;
}

GradedOperator& GradedOperator::operator-=(const GradedOperator& other) {
  return *this += other.scaled(Rational(-1));
}

bool operator==(const GradedOperator& a, const GradedOperator& b) {
  return a.n_ == b.n_ && a.domain_ == b.domain_ && a.blocks_ == b.blocks_;
}

GradedOperator compose(const GradedOperator& a, const GradedOperator& b) {
  if (a.n() != b.n()) throw std::invalid_argument("compose: dimension mismatch");
  Domain domain;
  for (const auto& s : b.domain()) {
    const auto ts = b.targets(s);
    if (std::all_of(ts.begin(), ts.end(), [&](BlockKey t) { return a.domain().contains(t); })) domain.insert(s);
  }
  std::set<Shift> shifts;
  for (const auto& sa : a.shifts()) {
    for (const auto& sb : b.shifts()) shifts.insert({sa.dq + sb.dq, sa.dp + sb.dp});
  }
  GradedOperator out(a.n(), std::move(domain), std::move(shifts));
  for (const auto& [kb, mb] : b.blocks()) {
    if (!out.domain().contains(kb.first)) continue;
    for (const auto& sa : a.shifts()) {
      const BlockKey target = kb.second + sa;
      if (const SparseMatrix* ma = a.block(kb.second, target)) {
        out.add_block(kb.first, target, matmul(*ma, mb));
      }
    }
  }
  return out;
}

GradedOperator adjoint(const GradedOperator& a, const Domain& also) {
  auto complete = [&](BlockKey t) {
    return std::all_of(a.shifts().begin(), a.shifts().end(), [&](const Shift& shift) {
      const BlockKey pre = t - shift;
      return !pre.valid() || a.domain().contains(pre);
    });
  };
  Domain domain;
  for (const auto& s : a.domain()) {
    for (const auto& t : a.targets(s)) {
      if (complete(t)) domain.insert(t);
    }
  }
  for (const auto& t : also) {
    if (t.valid() && complete(t)) domain.insert(t);
  }
  std::set<Shift> shifts;
  for (const auto& s : a.shifts()) shifts.insert({-s.dq, -s.dp});
  GradedOperator out(a.n(), std::move(domain), std::move(shifts));
  for (const auto& [key, m] : a.blocks()) {
    const auto& [source, target] = key;
    if (!out.domain().contains(target)) continue;
    const auto src = build_block(a.n(), source.q, source.p);
    const auto dst = build_block(a.n(), target.q, target.p);
    out.add_block(target, source, gram_adjoint(m, src->gram(), dst->gram()));
  }
  return out;
}

std::vector<BlockDiscrepancy> compare(const GradedOperator& a, const GradedOperator& b, const Domain& on) {
  for (const auto& key : on) {
    if (!a.domain().contains(key) || !b.domain().contains(key)) {
      throw std::logic_error("compare: block " + describe(key) + " is outside an exact domain");
    }
  }
  std::set<std::pair<BlockKey, BlockKey>> keys;
  for (const auto* op : {&a, &b}) {
    for (const auto& [key, m] : op->blocks()) {
      if (on.contains(key.first)) keys.insert(key);
    }
  }
  std::vector<BlockDiscrepancy> out;
  for (const auto& [source, target] : keys) {
    const SparseMatrix* ma = a.block(source, target);
    const SparseMatrix* mb = b.block(source, target);
    SparseMatrix diff = ma ? *ma : SparseMatrix(block_dim(a.n(), target), block_dim(a.n(), source));
    if (mb) diff -= *mb;
    if (!diff.is_zero()) out.push_back({source, target, diff.max_abs()});
  }
  return out;
}

SparseMatrix flatten(const GradedOperator& a, const Domain& sources, const Domain& targets) {
  std::map<BlockKey, std::size_t> col_offset, row_offset;
  std::size_t cols = 0, rows = 0;
  for (const auto& key : sources) {
    if (!a.domain().contains(key)) throw std::logic_error("flatten: source " + describe(key) + " outside domain");
    col_offset[key] = cols;
    cols += block_dim(a.n(), key);
  }
  for (const auto& key : targets) {
    row_offset[key] = rows;
    rows += block_dim(a.n(), key);
  }
  std::vector<SparseVector> columns(cols);
  for (const auto& [key, m] : a.blocks()) {
    const auto& [source, target] = key;
    auto c = col_offset.find(source);
    if (c == col_offset.end()) continue;
    auto r = row_offset.find(target);
    if (r == row_offset.end()) throw std::logic_error("flatten: target " + describe(target) + " not listed");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto& col = columns[c->second + j];
      for (const auto& e : m.column(j)) col.push_back({r->second + e.index, e.value});
    }
  }
  SparseMatrix out(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    auto& col = columns[j];
    std::sort(col.begin(), col.end(), [](const Entry& x, const Entry& y) { return x.index < y.index; });
    out.set_column(j, std::move(col));
  }
  return out;
}

}  // namespace killing
