#include "killing/rational.hpp"

#include <stdexcept>

namespace killing {

std::string to_fraction_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational out;
  if (out.set_str(std::string(text), 10) != 0 || sgn(out.get_den()) == 0) {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
  out.canonicalize();
  return out;
}

}  // namespace killing
