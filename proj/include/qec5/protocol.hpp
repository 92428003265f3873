#pragma once

#include <array>
#include <optional>
#include <string>

#include "qec5/network.hpp"
#include "qec5/statevector.hpp"
#include "qec5/syndrome.hpp"

namespace qec5::protocol {

enum class Kind { Naive, Conditional };

std::string kind_name(Kind k);          // "naive" / "conditional"
Kind kind_from_name(const std::string&); // throws std::invalid_argument

// The correction indicated by a syndrome: a single Pauli on one data qubit,
// or nothing (kind == I) for the zero syndrome.
struct Correction {
  int qubit = -1;
  PauliKind kind = PauliKind::I;

  bool has() const { return kind != PauliKind::I; }
  std::string label() const;  // "X0".."Z4", or "none"

  friend bool operator==(const Correction& a, const Correction& b) {
    return a.kind == b.kind && (a.kind == PauliKind::I || a.qubit == b.qubit);
  }
  friend bool operator!=(const Correction& a, const Correction& b) { return !(a == b); }
};

struct SyndromeRow {
  int qubit;
  PauliKind kind;
  Syndrome syndrome;
};

// The fifteen single-qubit errors and their syndromes, in display order
// (X0..X4, Y0..Y4, Z0..Z4). All fifteen syndromes are distinct and nonzero,
// so together with 0000 -> "no error" every 4-bit value decodes uniquely.
const std::array<SyndromeRow, 15>& syndrome_table();

Correction decode(const Syndrome& s);

// Applies the correction (each error operator is its own inverse up to a
// global phase, so the correction operator equals the error operator).
StateVector apply_correction(const StateVector& s5, const Correction& c);

struct ProtocolResult {
  Syndrome syndrome1;
  std::optional<Syndrome> syndrome2;  // conditional protocol, second round
  Correction correction;
  StateVector output;  // 5 qubits
  int rounds_used;     // 1 or 2
};

// One extraction round; decode(S1) applied unconditionally.
ProtocolResult naive_correct(const StateVector& data, const network::Schedule& s,
                             const std::optional<network::ResolvedFault>& fault,
                             Rng& rng);

// Round 1; if S1 = 0000 stop with no correction, otherwise run a second
// round with fresh ancillas and apply decode(S2). A second-round fault can
// be attached for exploratory runs; sweeps leave it empty (one fault total).
ProtocolResult conditional_correct(
    const StateVector& data, const network::Schedule& s,
    const std::optional<network::ResolvedFault>& fault, Rng& rng,
    const std::optional<network::ResolvedFault>& round2_fault = std::nullopt);

ProtocolResult run_protocol(Kind kind, const StateVector& data,
                            const network::Schedule& s,
                            const std::optional<network::ResolvedFault>& fault,
                            Rng& rng);

}  // namespace qec5::protocol
