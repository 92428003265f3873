#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qec5/ancilla.hpp"
#include "qec5/statevector.hpp"
#include "qec5/syndrome.hpp"

namespace qec5::network {

inline constexpr std::size_t kDataQubits = 5;
inline constexpr std::size_t kAncillaQubits = 16;
inline constexpr std::size_t kTotalQubits = kDataQubits + kAncillaQubits;
inline constexpr std::size_t kFirstAncillaQubit = kDataQubits;

enum class GateKind { R, Cnot };

// A fault strikes immediately before or immediately after its gate.
enum class Placement { Before, After };

struct GateOp {
  GateKind kind;
  int column;          // time slot, left to right
  int serial;          // position in the total order, 0-based
  int data_qubit;      // CNOT control / R operand, 0..4
  int register_index;  // CNOT only: syndrome register 0..3
  int register_slot;   // CNOT only: which of the register's qubits, 0..3
  int target_qubit;    // CNOT only: global id of the target, 5..20
  std::string location_id;
};

// Order of the two gates sharing a column, by data-qubit index.
enum class ColumnOrder { DescendingDataQubit, AscendingDataQubit };

struct ScheduleOptions {
  ColumnOrder column_order = ColumnOrder::DescendingDataQubit;
  // Negative control: swaps one pair of block-1 couplings between two
  // registers. Every structural invariant still holds, but the measured
  // operators leave the check group, so the syndrome table breaks.
  bool corrupt_wiring = false;
};

// The full extraction circuit as a totally ordered gate list: 26 gates in 13
// columns. The registers are read out in sequence (a3, a2, a1, a0); each gets
// its two block-1 CNOTs with the data qubits in the computational frame, then
// its two block-2 CNOTs with the data qubits inside their R windows.
// Consecutive registers share a rotated qubit, so window-closing and
// window-opening R gates pair up in one column and ten R suffice. Data qubits
// are always controls, ancilla qubits always targets; each register receives
// four CNOTs, each landing on its own register qubit in arrival order, so no
// register qubit is targeted twice.
struct Schedule {
  std::vector<GateOp> gates;  // in serial order
  std::array<ancilla::AncillaRegister, 4> registers;
  ScheduleOptions options;
};

Schedule build_schedule(const ScheduleOptions& opts = {});

// Throws std::invalid_argument for an unknown location.
const GateOp& gate_by_location(const Schedule& s, const std::string& location_id);

// One entry per place a single fault can strike.
struct FaultLocation {
  std::string location_id;
  Placement placement;
  int arity;  // operand count: 2 for CNOT, 1 for R and input locations
};

// Before/after every gate, plus the five input locations "input.d0".."input.d4"
// (single-qubit, before the whole circuit): 2*26 + 5 = 57 entries.
std::vector<FaultLocation> enumerate_fault_locations(const Schedule& s);

// A fault reduced to concrete circuit coordinates, ready for execution.
// Produced from a FaultSpec/FaultCase by faults::resolve_fault, or built
// directly in tests.
struct ResolvedFault {
  int gate_serial = -1;  // -1: applied to the input, before every gate
  Placement placement = Placement::Before;
  // Pauli payload: (global qubit, kind) pairs.
  std::vector<std::pair<std::size_t, PauliKind>> paulis;
  // Unitary payload (two-qubit gate locations): acts on (unitary_q1, unitary_q2).
  std::optional<Mat4> unitary;
  std::size_t unitary_q1 = 0;
  std::size_t unitary_q2 = 0;
};

enum class AncillaPreparation { EvenParity, AllZeros };

// data (5 qubits) extended with the four freshly prepared registers, all 26
// gates applied in serial order, the fault (if any) injected at its
// placement. Returns the 21-qubit state just before measurement.
StateVector extraction_pre_measurement(
    const StateVector& data, const Schedule& s,
    const std::optional<ResolvedFault>& fault,
    AncillaPreparation prep = AncillaPreparation::EvenParity);

struct ExtractionResult {
  Syndrome syndrome;
  StateVector post_data;               // 5 qubits, renormalized
  std::array<int, 16> raw_outcomes;    // per ancilla qubit, ids 5..20 in order
};

// One full extraction round: prepare, run gates with the fault, measure all
// 16 ancilla qubits, fold each register's outcomes into its parity bit, and
// drop the measured ancillas.
ExtractionResult run_extraction(
    const StateVector& data, const Schedule& s,
    const std::optional<ResolvedFault>& fault, Rng& rng,
    AncillaPreparation prep = AncillaPreparation::EvenParity);

// Stable structured-text form, one record per gate (documented in the
// README). parse_schedule validates all structural invariants and throws
// std::invalid_argument on any violation.
std::string export_schedule(const Schedule& s);
Schedule parse_schedule(const std::string& text);

}  // namespace qec5::network
