#include "qec5/protocol.hpp"

#include <stdexcept>

namespace qec5::protocol {

std::string kind_name(Kind k) {
  return k == Kind::Naive ? "naive" : "conditional";
}

Kind kind_from_name(const std::string& s) {
  if (s == "naive") return Kind::Naive;
  if (s == "conditional") return Kind::Conditional;
  throw std::invalid_argument("unknown protocol '" + s + "'");
}

std::string Correction::label() const {
  if (!has()) return "none";
  return std::string(1, pauli_char(kind)) + std::to_string(qubit);
}

const std::array<SyndromeRow, 15>& syndrome_table() {
  static const std::array<SyndromeRow, 15> table = [] {
    const std::array<std::array<const char*, 5>, 3> bits = {{
        {"0101", "0010", "1001", "0100", "1010"},   // X errors
        {"1000", "1100", "0110", "0011", "0001"},   // Y errors
        {"1101", "1110", "1111", "0111", "1011"},   // Z errors
    }};
    const std::array<PauliKind, 3> kinds = {PauliKind::X, PauliKind::Y, PauliKind::Z};
    std::array<SyndromeRow, 15> t{};
    for (int k = 0; k < 3; ++k)
      for (int q = 0; q < 5; ++q)
        t[5 * k + q] = {q, kinds[k], Syndrome::from_string(bits[k][q])};
    return t;
  }();
  return table;
}

Correction decode(const Syndrome& s) {
  // The fifteen table syndromes exhaust the nonzero 4-bit values, so this
  // lookup is total: zero means "leave the state alone", anything else names
  // exactly one single-qubit correction.
  static const std::array<Correction, 16> by_value = [] {
    std::array<Correction, 16> m{};
    for (const SyndromeRow& row : syndrome_table())
      m[row.syndrome.value()] = Correction{row.qubit, row.kind};
    return m;
  }();
  return by_value[s.value()];
}

StateVector apply_correction(const StateVector& s5, const Correction& c) {
  StateVector out = s5;
  if (c.has()) out.apply_pauli(std::size_t(c.qubit), c.kind);
  return out;
}

ProtocolResult naive_correct(const StateVector& data, const network::Schedule& s,
                             const std::optional<network::ResolvedFault>& fault,
                             Rng& rng) {
  auto round1 = network::run_extraction(data, s, fault, rng);
  const Correction c = decode(round1.syndrome);
  return ProtocolResult{round1.syndrome, std::nullopt, c,
                        apply_correction(round1.post_data, c), 1};
}

ProtocolResult conditional_correct(
    const StateVector& data, const network::Schedule& s,
    const std::optional<network::ResolvedFault>& fault, Rng& rng,
    const std::optional<network::ResolvedFault>& round2_fault) {
  auto round1 = network::run_extraction(data, s, fault, rng);
  if (round1.syndrome.is_zero())
    return ProtocolResult{round1.syndrome, std::nullopt, Correction{},
                          std::move(round1.post_data), 1};

  // Nonzero first syndrome: repeat the extraction on fresh ancillas and act
  // on the repeat only. A zero repeat decodes to "no correction", covering
  // faults whose sole damage was a misleading first syndrome.
  auto round2 = network::run_extraction(round1.post_data, s, round2_fault, rng);
  const Correction c = decode(round2.syndrome);
  return ProtocolResult{round1.syndrome, round2.syndrome, c,
                        apply_correction(round2.post_data, c), 2};
}

ProtocolResult run_protocol(Kind kind, const StateVector& data,
                            const network::Schedule& s,
                            const std::optional<network::ResolvedFault>& fault,
                            Rng& rng) {
  return kind == Kind::Naive ? naive_correct(data, s, fault, rng)
                             : conditional_correct(data, s, fault, rng);
}

}  // namespace qec5::protocol
