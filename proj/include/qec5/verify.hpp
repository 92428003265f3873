#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qec5/code5.hpp"
#include "qec5/faults.hpp"
#include "qec5/network.hpp"
#include "qec5/protocol.hpp"

namespace qec5::verify {

enum class ErrorWeight { Zero, One, Many };

std::string weight_label(ErrorWeight w);  // "0", "1", "many"

// Result of the brute-force residual-error oracle.
struct WeightVerdict {
  ErrorWeight weight;
  protocol::Correction best_correction;  // none when weight is Zero
  double best_fidelity;                  // best |<ideal|P state>|^2 over candidates
};

// Tries the identity plus all 15 single-qubit Paulis as candidate
// corrections and classifies against 1 - tol: Zero when the state already
// matches the ideal, One when a single Pauli restores it, Many otherwise.
WeightVerdict min_error_weight(const StateVector& state, const StateVector& ideal,
                               double tol = 1e-9);

// Squared projection of `state` onto span{ideal, X_q ideal, Y_q ideal,
// Z_q ideal}, maximized over data qubits q. Equals 1 exactly when the
// deviation from the ideal state is confined to one qubit; unlike the strict
// weight this also accepts coherent superpositions of "no error" and "one
// error", which arise from unitary (non-Pauli) faults.
double single_qubit_span_fidelity(const StateVector& state, const StateVector& ideal);

struct NamedLogical {
  std::string name;  // "zero", "one", "plus"
  code5::LogicalAmplitudes logical;
};

// (1,0), (0,1), (1/sqrt2, 1/sqrt2)
const std::array<NamedLogical, 3>& canonical_logical_states();

// ---------------------------------------------------------------------------
// Syndrome-table reproduction

struct SyndromeTableRow {
  std::string error;      // "X0".."Z4"
  std::string expected;   // from the stored decode table
  std::string simulated;  // from an actual extraction run
  bool match;
};

struct SyndromeTableCheck {
  std::vector<SyndromeTableRow> rows;  // 15, in table order
  bool all_match;
};

// Simulates each of the 15 single-qubit input errors on |0L> and compares
// the extracted syndrome with the stored table. This is the authoritative
// validation of the network wiring.
SyndromeTableCheck reproduce_syndrome_table(const network::Schedule& s,
                                            std::uint64_t seed);

// ---------------------------------------------------------------------------
// The worked failure example

// A bit-flip pair striking just before the opening-column CNOT that couples
// control d0 into register a3, on a clean |0L>: the single-round protocol
// misreads the syndrome as X3 and its "correction" leaves bit flips on both
// qubit 0 and qubit 3, while the conditional protocol recovers the state
// exactly.
struct FailureDemo {
  std::string case_id;

  Syndrome naive_syndrome;
  protocol::Correction naive_correction;
  WeightVerdict naive_verdict;     // expected: Many
  double naive_two_flip_fidelity;  // fidelity after undoing X0 and X3 by hand

  Syndrome conditional_s1;
  std::optional<Syndrome> conditional_s2;
  protocol::Correction conditional_correction;
  WeightVerdict conditional_verdict;  // expected: Zero

  bool claims_hold;
};

FailureDemo failure_demo(const network::Schedule& s, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Exhaustive sweeps

enum class SweepInput { Clean, SingleErrors };

std::string sweep_input_name(SweepInput i);  // "clean" / "single-errors"

struct SweepOptions {
  protocol::Kind kind = protocol::Kind::Conditional;
  SweepInput input = SweepInput::Clean;
  code5::LogicalAmplitudes logical{1.0, 0.0};
  std::uint64_t seed = 17;
  int threads = 1;
  double fidelity_tol = 1e-9;
  // Optional case_id filter; empty means every case.
  std::vector<std::string> case_filter;
};

struct SweepRecord {
  std::string case_id;
  Syndrome syndrome1;
  std::optional<Syndrome> syndrome2;
  int rounds_used;
  protocol::Correction correction;  // what the protocol applied
  ErrorWeight weight;
  protocol::Correction best_correction;
  double best_fidelity;
  bool pass;
};

struct SweepReport {
  protocol::Kind kind;
  SweepInput input;
  code5::LogicalAmplitudes logical;
  std::uint64_t seed;
  std::vector<SweepRecord> records;  // one per case, in enumeration order
  std::size_t weight0_count = 0;
  std::size_t weight1_count = 0;
  std::size_t weight_many_count = 0;
  std::size_t pass_count = 0;
  bool all_pass = false;
};

// Clean input: every single-Pauli fault case (555), pass = weight <= 1.
// Single-error input: the 15 input-error cases with no circuit fault,
// pass = weight 0 (perfect correction). Deterministic given the seed,
// independent of the thread count.
SweepReport sweep(const network::Schedule& s, const SweepOptions& opts);

// ---------------------------------------------------------------------------
// Ancilla information-leak contrast

struct LeakStateRecord {
  std::string name;
  code5::LogicalAmplitudes logical;
  std::string cat_syndrome;  // syndrome of a clean extraction, expected 0000
  double cat_fidelity;       // post-extraction data fidelity vs input
  double zero_fidelity;      // same, with all-zeros ancillas substituted
};

struct LeakReport {
  std::vector<LeakStateRecord> states;  // the three canonical states
  // Largest pointwise difference between the 16-qubit pre-measurement
  // outcome distributions of any two canonical states (cat ancillas).
  double max_distribution_diff;
  bool distributions_match;   // max diff <= 1e-9
  bool cat_preserves_data;    // every cat_fidelity >= 1 - 1e-9
  bool cat_syndromes_zero;
  bool zero_ancilla_disturbs; // some zero_fidelity < 0.9
  bool all_hold;
};

// Even-parity registers carry only parity: the ancilla outcome distribution
// is identical for every encoded input and the data is untouched. All-zeros
// registers leak codeword information: measuring them collapses the data.
LeakReport ancilla_leak_test(const network::Schedule& s, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Random-unitary fault sampling

struct SampleRecord {
  std::string case_id;  // "<location>:<placement>:u<seed>"
  Syndrome syndrome1;
  std::optional<Syndrome> syndrome2;
  int rounds_used;
  protocol::Correction correction;
  ErrorWeight weight;     // strict verdict for the sampled branch
  double best_fidelity;
  double span_fidelity;   // single-qubit-span projection of the output
  bool confined;          // span_fidelity >= 1 - tol
  bool strict_pass;       // weight <= 1
};

struct SampleReport {
  int trials;
  std::uint64_t seed;
  std::vector<SampleRecord> records;
  std::size_t strict_pass_count = 0;
  std::size_t confined_count = 0;
  double worst_best_fidelity = 1.0;
  bool all_confined = false;
};

// Samples (CNOT location, placement, Haar unitary) triples and runs the
// conditional protocol on clean |0L>. Each sampled measurement branch is
// classified both strictly (residual weight) and by single-qubit confinement;
// coherent faults that evade round 1 legitimately leave a superposition of
// "no error" and one single-qubit error, so confinement is the
// fault-tolerance criterion here.
SampleReport monte_carlo_unitary_sweep(const network::Schedule& s, int trials,
                                       std::uint64_t seed, int threads = 1,
                                       double tol = 1e-9);

}  // namespace qec5::verify
