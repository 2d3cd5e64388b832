#include "killing/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace killing {

MultiIndex::MultiIndex(std::vector<unsigned> components)
    : components_(std::move(components)),
      order_(std::accumulate(components_.begin(), components_.end(), 0u)) {}

MultiIndex::MultiIndex(std::initializer_list<unsigned> components)
    : MultiIndex(std::vector<unsigned>(components)) {}

MultiIndex MultiIndex::zero(std::size_t n) { return MultiIndex(std::vector<unsigned>(n, 0)); }

MultiIndex MultiIndex::unit(std::size_t n, std::size_t k) {
  if (k >= n) throw std::out_of_range("unit index outside dimension");
  std::vector<unsigned> c(n, 0);
  c[k] = 1;
  return MultiIndex(std::move(c));
}

MultiIndex MultiIndex::incremented(std::size_t k) const {
  MultiIndex out = *this;
  ++out.components_.at(k);
  ++out.order_;
  return out;
}

std::optional<MultiIndex> MultiIndex::decremented(std::size_t k) const {
  if (components_.at(k) == 0) return std::nullopt;
  MultiIndex out = *this;
  --out.components_[k];
  --out.order_;
  return out;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.dimension() != dimension()) throw std::invalid_argument("dimension mismatch");
  std::vector<unsigned> c = components_;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += other.components_[k];
  return MultiIndex(std::move(c));
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(components_[k]);
  }
  return s + ")";
}

Integer factorial_of(const MultiIndex& index) {
  Integer out = 1;
  for (unsigned i : index.components()) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), i);
    out *= f;
  }
  return out;
}

}  // namespace killing
