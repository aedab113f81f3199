#include "freedense/numbers.hpp"

#include <stdexcept>

namespace freedense {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  q.canonicalize();
  return q;
}

}  // namespace freedense
