#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qec5/pauli.hpp"
#include "qec5/rng.hpp"

namespace qec5 {

using cxd = std::complex<double>;
using Mat4 = std::array<std::array<cxd, 4>, 4>;

struct MeasurementRecord {
  std::size_t qubit;
  int outcome;         // 0 or 1
  double probability;  // Born probability of the reported outcome
};

// Dense complex state vector over 1..21 qubits.
//
// Bit order: qubit 0 is the most significant position of a printed ket, so
// basis index i assigns qubit q the bit (i >> (qubit_count-1-q)) & 1 and the
// string "01011" reads left to right as qubits 0..4. Every module shares
// this convention.
class StateVector {
 public:
  // |00...0>
  explicit StateVector(std::size_t qubit_count);

  static StateVector basis_state(std::size_t qubit_count, const std::string& bits);
  static StateVector basis_state(std::size_t qubit_count, std::uint64_t index);

  std::size_t qubit_count() const { return qubit_count_; }
  std::uint64_t dim() const { return std::uint64_t(1) << qubit_count_; }

  cxd& amp(std::uint64_t i) { return amps_[i]; }
  const cxd& amp(std::uint64_t i) const { return amps_[i]; }
  const std::vector<cxd>& amps() const { return amps_; }

  double norm() const;  // 2-norm; 1 for any valid state
  void normalize();     // throws on (near-)zero vector

  void apply_r(std::size_t q);  // rows (1,1)/sqrt2 and (1,-1)/sqrt2
  void apply_pauli(std::size_t q, PauliKind k);
  void apply_cnot(std::size_t control, std::size_t target);

  // u acts on the ordered pair (q1, q2): local basis index 2*bit(q1)+bit(q2).
  // Rejects u that is not unitary within 1e-10.
  void apply_two_qubit_unitary(std::size_t q1, std::size_t q2, const Mat4& u);

  MeasurementRecord measure_qubit(std::size_t q, Rng& rng);

  // Measures the trailing `count` qubits jointly (a single categorical draw
  // over their outcome distribution; identical in law to measuring them one
  // by one, since the projectors commute) and returns the outcomes together
  // with the renormalized state on the remaining leading qubits. Outcome bit
  // (count-1-j) holds the result for qubit (qubit_count()-count+j), i.e. the
  // global bit-order convention restricted to the tail.
  std::pair<std::uint64_t, StateVector> measure_tail_and_drop(std::size_t count,
                                                              Rng& rng);

  // Marginal outcome distribution of the listed qubits (keys are bitstrings
  // in the listed order); entries with probability 0 are omitted.
  std::map<std::string, double> outcome_distribution(
      const std::vector<std::size_t>& qubits) const;

 private:
  std::size_t qubit_count_;
  std::vector<cxd> amps_;

  std::uint64_t mask(std::size_t q) const {
    return std::uint64_t(1) << (qubit_count_ - 1 - q);
  }
  void check_qubit(std::size_t q) const;
};

cxd overlap(const StateVector& a, const StateVector& b);  // <a|b>
double fidelity(const StateVector& a, const StateVector& b);  // |<a|b>|^2

// a's qubits become the leading (most significant) qubits of the product.
StateVector tensor(const StateVector& a, const StateVector& b);

// Keeps the listed qubits (strictly ascending) and drops the rest, which
// must be in a definite computational basis state: all but at most 1e-10 of
// the probability mass on one bit pattern of the dropped qubits. Throws
// std::invalid_argument otherwise (e.g. a dropped qubit is still entangled).
StateVector restrict_to(const StateVector& s, const std::vector<std::size_t>& keep);

// Near-uniform (Haar) random 4x4 unitary: complex Gaussian matrix followed
// by modified Gram-Schmidt with positive-real diagonal.
Mat4 haar_unitary4(Rng& rng);

Mat4 kron(const Mat2& a, const Mat2& b);

}  // namespace qec5
