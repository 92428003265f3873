#pragma once

#include <array>

#include "qec5/statevector.hpp"

namespace qec5::code5 {

// Coefficients of a logical state alpha*|0L> + beta*|1L>.
struct LogicalAmplitudes {
  cxd alpha;
  cxd beta;
};

struct SignedTerm {
  const char* bits;  // five characters
  int sign;          // +1 or -1
};

// The sixteen signed basis strings of the even-parity codeword component, in
// a fixed order. This is the single transcription point for the code: the
// odd component is derived by complementing every string (keeping signs) and
// everything else is computed.
const std::array<SignedTerm, 16>& codeword_terms();

// Equal-magnitude (1/4) superposition of the 16 even-parity strings above.
StateVector codeword_even();

// Bitwise complement of codeword_even: supported on the 16 odd-parity strings.
StateVector codeword_odd();

// |0L> = (even + odd)/sqrt2, |1L> = (even - odd)/sqrt2.
StateVector logical_zero();
StateVector logical_one();

// alpha*|0L> + beta*|1L>, normalized. Throws std::invalid_argument when
// |alpha|^2 + |beta|^2 is (near-)zero; otherwise the pair is normalized
// first, so unnormalized inputs are accepted.
StateVector encode(const LogicalAmplitudes& l);

// |<ideal|state>|^2 for two 5-qubit states.
double logical_fidelity(const StateVector& state, const StateVector& ideal);

// The four commuting parity checks measured by the extraction network, one
// per syndrome register a0..a3, as strings over the X/Y/Z alphabet on data
// qubits 0..4. Both logical states are +1 eigenstates of each check, and a
// single-qubit error is identified by which checks it anticommutes with.
const std::array<std::array<PauliKind, 5>, 4>& parity_checks();

}  // namespace qec5::code5
