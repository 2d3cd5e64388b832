#include "killing/sparse_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace killing {

namespace {

/// Dense scatter buffer reused across columns of a product.
class Accumulator {
 public:
  explicit Accumulator(std::size_t size) : values_(size), touched_(size, false) {}

  void add(std::size_t index, const Rational& a, const Rational& b) {
    if (!touched_[index]) {
      touched_[index] = true;
      values_[index] = a * b;
      indices_.push_back(index);
    } else {
      values_[index] += a * b;
    }
  }

  SparseVector drain() {
    std::sort(indices_.begin(), indices_.end());
    SparseVector out;
    out.reserve(indices_.size());
    for (std::size_t i : indices_) {
      if (sgn(values_[i]) != 0) out.push_back({i, values_[i]});
      touched_[i] = false;
    }
    indices_.clear();
    return out;
  }

 private:
  std::vector<Rational> values_;
  std::vector<bool> touched_;
  std::vector<std::size_t> indices_;
};

}  // namespace

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.columns_[i].push_back({i, Rational(1)});
  return out;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(rows[r][c]) != 0) out.columns_[c].push_back({r, rows[r][c]});
    }
  }
  return out;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& col : columns_) total += col.size();
  return total;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

void SparseMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= columns_.size()) throw std::out_of_range("SparseMatrix::add");
  if (sgn(value) == 0) return;
  auto& column = columns_[col];
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const Entry& e, std::size_t r) { return e.index < r; });
  if (it != column.end() && it->index == row) {
    it->value += value;
    if (sgn(it->value) == 0) column.erase(it);
  } else {
    column.insert(it, Entry{row, value});
  }
}

Rational SparseMatrix::at(std::size_t row, std::size_t col) const {
  const auto& column = columns_.at(col);
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const Entry& e, std::size_t r) { return e.index < r; });
  if (it != column.end() && it->index == row) return it->value;
  return Rational(0);
}

void SparseMatrix::set_column(std::size_t col, SparseVector entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].index >= rows_ || sgn(entries[i].value) == 0 ||
        (i > 0 && entries[i - 1].index >= entries[i].index)) {
      throw std::invalid_argument("set_column: entries must be sorted, nonzero, in range");
    }
  }
  columns_.at(col) = std::move(entries);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(cols(), rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& e : columns_[c]) out.columns_[e.index].push_back({c, e.value});
  }
  return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& factor) const {
  if (sgn(factor) == 0) return SparseMatrix(rows_, cols());
  SparseMatrix out = *this;
  for (auto& col : out.columns_) {
    for (auto& e : col) e.value *= factor;
  }
  return out;
}

Rational SparseMatrix::max_abs() const {
  Rational best = 0;
  for (const auto& col : columns_) {
    for (const auto& e : col) {
      Rational v = abs(e.value);
      if (v > best) best = v;
    }
  }
  return best;
}

std::vector<std::vector<Rational>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols()));
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& e : columns_[c]) out[e.index][c] = e.value;
  }
  return out;
}

std::string SparseMatrix::to_string() const {
  std::ostringstream os;
  for (const auto& row : to_dense()) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c].get_str();
    os << "\n";
  }
  return os.str();
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& other) {
  if (other.rows_ != rows_ || other.cols() != cols()) {
    throw std::invalid_argument("SparseMatrix addition: dimension mismatch");
  }
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (!other.columns_[c].empty()) columns_[c] = axpy(columns_[c], Rational(1), other.columns_[c]);
  }
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& other) {
  if (other.rows_ != rows_ || other.cols() != cols()) {
    throw std::invalid_argument("SparseMatrix subtraction: dimension mismatch");
  }
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (!other.columns_[c].empty()) columns_[c] = axpy(columns_[c], Rational(-1), other.columns_[c]);
  }
  return *this;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols() != b.cols()) return false;
  for (std::size_t c = 0; c < a.columns_.size(); ++c) {
    const auto& x = a.columns_[c];
    const auto& y = b.columns_[c];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].index != y[i].index || x[i].value != y[i].value) return false;
    }
  }
  return true;
}

SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
  SparseMatrix out(a.rows(), b.cols());
  Accumulator acc(a.rows());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    const auto col = b.column(j);
    if (col.empty()) continue;
    for (const auto& bk : col) {
      for (const auto& ai : a.column(bk.index)) acc.add(ai.index, ai.value, bk.value);
    }
    out.set_column(j, acc.drain());
  }
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) { return matmul(a, b); }

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ca = 0; ca < a.cols(); ++ca) {
    for (std::size_t cb = 0; cb < b.cols(); ++cb) {
      SparseVector col;
      col.reserve(a.column(ca).size() * b.column(cb).size());
      for (const auto& ea : a.column(ca)) {
        for (const auto& eb : b.column(cb)) {
          col.push_back({ea.index * b.rows() + eb.index, ea.value * eb.value});
        }
      }
      out.set_column(ca * b.cols() + cb, std::move(col));
    }
  }
  return out;
}

SparseMatrix vstack(std::span<const SparseMatrix> parts) {
  if (parts.empty()) return {};
  const std::size_t cols = parts.front().cols();
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += p.rows();
  }
  SparseMatrix out(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    SparseVector col;
    std::size_t offset = 0;
    for (const auto& p : parts) {
      for (const auto& e : p.column(c)) col.push_back({e.index + offset, e.value});
      offset += p.rows();
    }
    out.set_column(c, std::move(col));
  }
  return out;
}

SparseMatrix hstack(std::span<const SparseMatrix> parts) {
  if (parts.empty()) return {};
  const std::size_t rows = parts.front().rows();
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
    cols += p.cols();
  }
  SparseMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t c = 0; c < p.cols(); ++c) {
      out.set_column(offset + c, SparseVector(p.column(c).begin(), p.column(c).end()));
    }
    offset += p.cols();
  }
  return out;
}

SparseVector apply(const SparseMatrix& a, const SparseVector& x) {
  Accumulator acc(a.rows());
  for (const auto& xk : x) {
    if (xk.index >= a.cols()) throw std::invalid_argument("apply: vector index out of range");
    for (const auto& ai : a.column(xk.index)) acc.add(ai.index, ai.value, xk.value);
  }
  return acc.drain();
}

SparseVector axpy(const SparseVector& x, const Rational& factor, const SparseVector& y) {
  SparseVector out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].index < y[j].index)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].index < x[i].index) {
      out.push_back({y[j].index, factor * y[j].value});
      ++j;
    } else {
      Rational v = x[i].value + factor * y[j].value;
      if (sgn(v) != 0) out.push_back({x[i].index, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseMatrix gram_adjoint(const SparseMatrix& a, std::span<const Rational> gram_domain,
                          std::span<const Rational> gram_codomain) {
  if (gram_domain.size() != a.cols() || gram_codomain.size() != a.rows()) {
    throw std::invalid_argument("gram_adjoint: Gram size mismatch");
  }
  for (const auto& g : gram_domain) {
    if (sgn(g) <= 0) throw std::invalid_argument("gram_adjoint: non-positive Gram entry");
  }
  for (const auto& g : gram_codomain) {
    if (sgn(g) <= 0) throw std::invalid_argument("gram_adjoint: non-positive Gram entry");
  }
  SparseMatrix out(a.cols(), a.rows());
  std::vector<SparseVector> cols(a.rows());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (const auto& e : a.column(c)) {
      cols[e.index].push_back({c, e.value * gram_codomain[e.index] / gram_domain[c]});
    }
  }
  for (std::size_t r = 0; r < cols.size(); ++r) out.set_column(r, std::move(cols[r]));
  return out;
}

}  // namespace killing
