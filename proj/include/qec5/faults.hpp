#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qec5/network.hpp"

namespace qec5::faults {

// One Pauli per operand qubit of the faulted gate, in operand order (CNOT:
// control first, then target). All-identity assignments are invalid.
struct PauliAssignment {
  std::vector<PauliKind> ops;
};

// Seed for a deterministically generated Haar-random 4x4 unitary; only valid
// at two-qubit (CNOT) locations.
struct RandomUnitary {
  std::uint64_t seed;
};

struct FaultSpec {
  std::string location_id;
  network::Placement placement;
  std::variant<PauliAssignment, RandomUnitary> payload;
};

// An error already present on the encoded input, before the circuit runs.
struct InputError {
  int qubit;  // 0..4
  PauliKind kind;  // X, Y or Z
};

// One sweep case: exactly one of {fault, input_error} is set. case_id is a
// stable, self-describing key (grammar in the README):
//   "input.d3:Y"                  input error Y on data qubit 3
//   "blk1.cnot.d0.a3:before:XX"   Pauli pair (control letter first)
//   "rot2.d4:after:Z"             single Pauli at a rotation gate
//   "blk2.cnot.d1.a0:before:u42"  random unitary with seed 42
struct FaultCase {
  std::string case_id;
  std::optional<FaultSpec> fault;
  std::optional<InputError> input_error;
};

// The exhaustive single-Pauli case list: 15 input-error cases first (X, Y, Z
// by qubit), then for every gate in serial order, for before then after
// placement, every non-identity Pauli assignment. 16 CNOTs * 2 * 15 + 10
// rotations * 2 * 3 + 15 = 555 cases.
std::vector<FaultCase> all_pauli_fault_cases(const network::Schedule& s);

// Validates the location (must be a CNOT) and builds the FaultSpec. The drawn
// unitary is rejected at resolution time if it degenerates to a global phase
// times identity (a no-fault).
FaultSpec random_unitary_fault(const network::Schedule& s,
                               const std::string& location_id,
                               std::uint64_t seed,
                               network::Placement placement = network::Placement::Before);

std::string case_id_for(const FaultSpec& spec);
std::string case_id_for(const InputError& e);

// Rebuilds the full case from its id alone; throws std::invalid_argument on
// malformed ids or unknown locations.
FaultCase parse_case_id(const network::Schedule& s, const std::string& case_id);

// Maps a case onto concrete circuit coordinates (gate serial, global qubit
// ids, generated unitary). Validates arity, the all-identity ban, and the
// identity-unitary ban.
network::ResolvedFault resolve_fault(const network::Schedule& s, const FaultCase& c);

}  // namespace qec5::faults
