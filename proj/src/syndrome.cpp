#include "qec5/syndrome.hpp"

#include <stdexcept>

namespace qec5 {

std::string Syndrome::str() const {
  std::string s(4, '0');
  for (int i = 0; i < 4; ++i)
    if (bits[i]) s[i] = '1';
  return s;
}

Syndrome Syndrome::from_string(const std::string& s) {
  if (s.size() != 4)
    throw std::invalid_argument("Syndrome: expected four bits");
  Syndrome out;
  for (int i = 0; i < 4; ++i) {
    if (s[i] != '0' && s[i] != '1')
      throw std::invalid_argument("Syndrome: bits must be '0' or '1'");
    out.bits[i] = s[i] == '1';
  }
  return out;
}

}  // namespace qec5
