#include "qec5/pauli.hpp"

#include <stdexcept>
#include <string>

namespace qec5 {

Mat2 pauli_matrix(PauliKind k) {
  switch (k) {
    case PauliKind::I:
      return {{{1.0, 0.0}, {0.0, 1.0}}};
    case PauliKind::X:
      return {{{0.0, 1.0}, {1.0, 0.0}}};
    case PauliKind::Y:
      return {{{1.0, 0.0}, {0.0, -1.0}}};
    case PauliKind::Z:
      // X * Y, written out.
      return {{{0.0, -1.0}, {1.0, 0.0}}};
  }
  throw std::invalid_argument("pauli_matrix: bad PauliKind");
}

char pauli_char(PauliKind k) {
  switch (k) {
    case PauliKind::I: return 'I';
    case PauliKind::X: return 'X';
    case PauliKind::Y: return 'Y';
    case PauliKind::Z: return 'Z';
  }
  throw std::invalid_argument("pauli_char: bad PauliKind");
}

PauliKind pauli_from_char(char c) {
  switch (c) {
    case 'I': return PauliKind::I;
    case 'X': return PauliKind::X;
    case 'Y': return PauliKind::Y;
    case 'Z': return PauliKind::Z;
  }
  throw std::invalid_argument(std::string("pauli_from_char: bad letter '") + c + "'");
}

}  // namespace qec5
