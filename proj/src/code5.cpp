#include "qec5/code5.hpp"

#include <cmath>
#include <stdexcept>

namespace qec5::code5 {

const std::array<SignedTerm, 16>& codeword_terms() {
  static const std::array<SignedTerm, 16> terms = {{
      {"00000", +1}, {"11000", +1}, {"01100", +1}, {"00110", +1},
      {"00011", +1}, {"10001", +1}, {"10100", -1}, {"01010", -1},
      {"00101", -1}, {"10010", -1}, {"01001", -1}, {"11110", -1},
      {"01111", -1}, {"10111", -1}, {"11011", -1}, {"11101", -1},
  }};
  return terms;
}

namespace {

std::uint64_t term_index(const char* bits) {
  std::uint64_t i = 0;
  for (const char* c = bits; *c; ++c) i = (i << 1) | std::uint64_t(*c == '1');
  return i;
}

StateVector build_component(bool complement) {
  StateVector s(5);
  s.amp(0) = 0.0;
  for (const SignedTerm& t : codeword_terms()) {
    std::uint64_t i = term_index(t.bits);
    if (complement) i = ~i & 0x1f;
    s.amp(i) = t.sign * 0.25;
  }
  return s;
}

}  // namespace

StateVector codeword_even() { return build_component(false); }

StateVector codeword_odd() { return build_component(true); }

StateVector logical_zero() { return encode({1.0, 0.0}); }

StateVector logical_one() { return encode({0.0, 1.0}); }

StateVector encode(const LogicalAmplitudes& l) {
  const double nn = std::norm(l.alpha) + std::norm(l.beta);
  if (nn < 1e-12) throw std::invalid_argument("encode: zero amplitude vector");
  const double inv = 1.0 / std::sqrt(nn);
  const cxd a = l.alpha * inv;
  const cxd b = l.beta * inv;

  // |0L> = (even + odd)/sqrt2 and |1L> = (even - odd)/sqrt2, so the encoded
  // state is (a+b)/sqrt2 * even + (a-b)/sqrt2 * odd.
  const cxd ce = (a + b) * std::sqrt(0.5);
  const cxd co = (a - b) * std::sqrt(0.5);

  const StateVector even = codeword_even();
  const StateVector odd = codeword_odd();
  StateVector out(5);
  for (std::uint64_t i = 0; i < out.dim(); ++i)
    out.amp(i) = ce * even.amp(i) + co * odd.amp(i);
  return out;
}

double logical_fidelity(const StateVector& state, const StateVector& ideal) {
  if (state.qubit_count() != 5 || ideal.qubit_count() != 5)
    throw std::invalid_argument("logical_fidelity: expected 5-qubit states");
  return fidelity(ideal, state);
}

const std::array<std::array<PauliKind, 5>, 4>& parity_checks() {
  // Register a_r checks bit-flip parity (X) of its second-block sources and
  // phase parity (Y) of its first-block sources; qubits it never touches
  // stay I. Derived from the wiring, cross-checked by simulation.
  using P = PauliKind;
  static const std::array<std::array<P, 5>, 4> checks = {{
      {P::X, P::X, P::Y, P::I, P::Y},  // a0
      {P::Y, P::X, P::X, P::Y, P::I},  // a1
      {P::I, P::Y, P::X, P::X, P::Y},  // a2
      {P::Y, P::I, P::Y, P::X, P::X},  // a3
  }};
  return checks;
}

}  // namespace qec5::code5
