#include "qec5/ancilla.hpp"

#include <bit>
#include <cmath>

namespace qec5::ancilla {

StateVector even_parity_state() {
  StateVector s(4);
  s.amp(0) = 0.0;
  const double a = 1.0 / std::sqrt(8.0);
  for (std::uint64_t i = 0; i < 16; ++i)
    if (std::popcount(i) % 2 == 0) s.amp(i) = a;
  return s;
}

int syndrome_bit(const std::array<int, 4>& outcomes) {
  return (outcomes[0] ^ outcomes[1] ^ outcomes[2] ^ outcomes[3]) & 1;
}

}  // namespace qec5::ancilla
