#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "killing/rational.hpp"

namespace killing {

/// Exponent vector (i_1, ..., i_n). Labels both the Hermite polynomial H_I
/// and the symmetric monomial e^I. Coordinates are 0-based.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> components);
  MultiIndex(std::initializer_list<unsigned> components);

  static MultiIndex zero(std::size_t n);
  /// The index 1_k.
  static MultiIndex unit(std::size_t n, std::size_t k);

  std::size_t dimension() const { return components_.size(); }
  unsigned order() const { return order_; }
  unsigned operator[](std::size_t k) const { return components_[k]; }
  const std::vector<unsigned>& components() const { return components_; }

  MultiIndex incremented(std::size_t k) const;
  /// Empty when component k is already zero (the vanishing H_{I-1_k}).
  std::optional<MultiIndex> decremented(std::size_t k) const;

  MultiIndex operator+(const MultiIndex& other) const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.components_ == b.components_;
  }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<unsigned> components_;
  unsigned order_ = 0;
};

/// I! = i_1! ... i_n!
Integer factorial_of(const MultiIndex& index);

}  // namespace killing
