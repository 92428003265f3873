#pragma once

#include <array>
#include <cstddef>

#include "qec5/statevector.hpp"

namespace qec5::ancilla {

// One syndrome register: four physical qubits that jointly produce one
// syndrome bit. Registers are disjoint.
struct AncillaRegister {
  std::size_t register_index;         // 0..3, the a0..a3 lines
  std::array<std::size_t, 4> qubit_ids;
};

// Equal-weight superposition (amplitude 1/sqrt8) of the eight even-parity
// four-bit strings. A register prepared in this state records only the
// parity of the CNOTs applied onto it, nothing about their individual
// values.
StateVector even_parity_state();

// Parity (XOR) of one register's four measured bits.
int syndrome_bit(const std::array<int, 4>& outcomes);

}  // namespace qec5::ancilla
