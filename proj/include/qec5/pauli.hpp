#pragma once

#include <array>
#include <complex>

namespace qec5 {

// Single-qubit error alphabet used throughout this project:
//
//   X = bit flip      [[0, 1], [1,  0]]
//   Y = phase flip    [[1, 0], [0, -1]]
//   Z = X * Y         [[0,-1], [1,  0]]   (combined bit-and-phase error)
//
// Note this differs from the usual sigma_y/sigma_z labeling: here Y is the
// diagonal phase flip and Z is the literal matrix product X*Y (so Z*Z = -I).
// The syndrome and decode tables depend on this alphabet; don't relabel.
enum class PauliKind { I, X, Y, Z };

using Mat2 = std::array<std::array<std::complex<double>, 2>, 2>;

Mat2 pauli_matrix(PauliKind k);

char pauli_char(PauliKind k);

// Accepts 'I', 'X', 'Y', 'Z'; throws std::invalid_argument otherwise.
PauliKind pauli_from_char(char c);

}  // namespace qec5
