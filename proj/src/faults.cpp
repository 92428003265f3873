#include "qec5/faults.hpp"

#include <cmath>
#include <stdexcept>

namespace qec5::faults {

namespace {

constexpr std::array<PauliKind, 4> kKinds = {PauliKind::I, PauliKind::X, PauliKind::Y,
                                             PauliKind::Z};

std::string placement_name(network::Placement p) {
  return p == network::Placement::Before ? "before" : "after";
}

network::Placement placement_from_name(const std::string& s) {
  if (s == "before") return network::Placement::Before;
  if (s == "after") return network::Placement::After;
  throw std::invalid_argument("unknown placement '" + s + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

std::string case_id_for(const InputError& e) {
  return "input.d" + std::to_string(e.qubit) + ":" + pauli_char(e.kind);
}

std::string case_id_for(const FaultSpec& spec) {
  std::string id = spec.location_id + ":" + placement_name(spec.placement) + ":";
  if (const auto* pa = std::get_if<PauliAssignment>(&spec.payload)) {
    for (PauliKind k : pa->ops) id += pauli_char(k);
  } else {
    id += "u" + std::to_string(std::get<RandomUnitary>(spec.payload).seed);
  }
  return id;
}

std::vector<FaultCase> all_pauli_fault_cases(const network::Schedule& s) {
  std::vector<FaultCase> cases;
  cases.reserve(555);

  // Errors on the incoming data qubits, in syndrome-table order.
  for (PauliKind k : {PauliKind::X, PauliKind::Y, PauliKind::Z})
    for (int q = 0; q < 5; ++q) {
      InputError e{q, k};
      cases.push_back({case_id_for(e), std::nullopt, e});
    }

  // Every non-identity Pauli before and after every gate.
  for (const network::GateOp& g : s.gates) {
    for (network::Placement p : {network::Placement::Before, network::Placement::After}) {
      if (g.kind == network::GateKind::Cnot) {
        for (int i = 1; i < 16; ++i) {
          PauliAssignment pa{{kKinds[i / 4], kKinds[i % 4]}};
          FaultSpec spec{g.location_id, p, pa};
          cases.push_back({case_id_for(spec), spec, std::nullopt});
        }
      } else {
        for (PauliKind k : {PauliKind::X, PauliKind::Y, PauliKind::Z}) {
          FaultSpec spec{g.location_id, p, PauliAssignment{{k}}};
          cases.push_back({case_id_for(spec), spec, std::nullopt});
        }
      }
    }
  }
  return cases;
}

FaultSpec random_unitary_fault(const network::Schedule& s, const std::string& location_id,
                               std::uint64_t seed, network::Placement placement) {
  const network::GateOp& g = network::gate_by_location(s, location_id);
  if (g.kind != network::GateKind::Cnot)
    throw std::invalid_argument("random unitary faults need a two-qubit location");
  return FaultSpec{location_id, placement, RandomUnitary{seed}};
}

FaultCase parse_case_id(const network::Schedule& s, const std::string& id) {
  const auto parts = split(id, ':');

  if (parts.size() == 2 && parts[0].rfind("input.d", 0) == 0) {
    const std::string qs = parts[0].substr(7);
    if (qs.size() != 1 || qs[0] < '0' || qs[0] > '4')
      throw std::invalid_argument("bad input-error case '" + id + "'");
    if (parts[1].size() != 1)
      throw std::invalid_argument("bad input-error case '" + id + "'");
    const PauliKind k = pauli_from_char(parts[1][0]);
    if (k == PauliKind::I)
      throw std::invalid_argument("input error must not be the identity");
    InputError e{qs[0] - '0', k};
    return {case_id_for(e), std::nullopt, e};
  }

  if (parts.size() != 3)
    throw std::invalid_argument("bad fault case '" + id + "'");
  const network::GateOp& g = network::gate_by_location(s, parts[0]);
  const network::Placement p = placement_from_name(parts[1]);
  const std::string& payload = parts[2];
  if (payload.empty())
    throw std::invalid_argument("bad fault case '" + id + "'");

  FaultSpec spec{parts[0], p, PauliAssignment{}};
  if (payload[0] == 'u') {
    if (g.kind != network::GateKind::Cnot)
      throw std::invalid_argument("random unitary faults need a two-qubit location");
    std::uint64_t seed;
    try {
      std::size_t pos = 0;
      seed = std::stoull(payload.substr(1), &pos);
      if (pos != payload.size() - 1) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("bad unitary seed in '" + id + "'");
    }
    spec.payload = RandomUnitary{seed};
  } else {
    const std::size_t arity = g.kind == network::GateKind::Cnot ? 2 : 1;
    if (payload.size() != arity)
      throw std::invalid_argument("fault case '" + id + "' has the wrong operator count");
    PauliAssignment pa;
    bool all_identity = true;
    for (char c : payload) {
      const PauliKind k = pauli_from_char(c);
      if (k != PauliKind::I) all_identity = false;
      pa.ops.push_back(k);
    }
    if (all_identity)
      throw std::invalid_argument("fault case '" + id + "' is the identity");
    spec.payload = pa;
  }
  return {case_id_for(spec), spec, std::nullopt};
}

network::ResolvedFault resolve_fault(const network::Schedule& s, const FaultCase& c) {
  if (c.input_error.has_value() == c.fault.has_value())
    throw std::invalid_argument("fault case must carry exactly one of input error or gate fault");

  network::ResolvedFault rf;
  if (c.input_error) {
    const InputError& e = *c.input_error;
    if (e.qubit < 0 || e.qubit >= int(network::kDataQubits))
      throw std::invalid_argument("input error qubit out of range");
    if (e.kind == PauliKind::I)
      throw std::invalid_argument("input error must not be the identity");
    rf.gate_serial = -1;
    rf.placement = network::Placement::Before;
    rf.paulis.push_back({std::size_t(e.qubit), e.kind});
    return rf;
  }

  const FaultSpec& spec = *c.fault;
  const network::GateOp& g = network::gate_by_location(s, spec.location_id);
  rf.gate_serial = g.serial;
  rf.placement = spec.placement;

  if (const auto* pa = std::get_if<PauliAssignment>(&spec.payload)) {
    const std::size_t arity = g.kind == network::GateKind::Cnot ? 2 : 1;
    if (pa->ops.size() != arity)
      throw std::invalid_argument("fault operator count does not match gate arity");
    bool all_identity = true;
    for (PauliKind k : pa->ops)
      if (k != PauliKind::I) all_identity = false;
    if (all_identity)
      throw std::invalid_argument("fault must not be the identity");
    if (pa->ops[0] != PauliKind::I)
      rf.paulis.push_back({std::size_t(g.data_qubit), pa->ops[0]});
    if (arity == 2 && pa->ops[1] != PauliKind::I)
      rf.paulis.push_back({std::size_t(g.target_qubit), pa->ops[1]});
  } else {
    if (g.kind != network::GateKind::Cnot)
      throw std::invalid_argument("random unitary faults need a two-qubit location");
    const auto& ru = std::get<RandomUnitary>(spec.payload);
    Rng rng(splitmix64(ru.seed));
    Mat4 u = haar_unitary4(rng);
    // A draw that happens to be the identity (up to phase) would be no fault
    // at all; reject it instead of reporting a vacuous pass.
    bool identity = std::abs(std::abs(u[0][0]) - 1.0) < 1e-10;
    for (int r = 0; r < 4 && identity; ++r)
      for (int col = 0; col < 4 && identity; ++col) {
        const cxd want = r == col ? u[0][0] : cxd(0.0, 0.0);
        if (std::abs(u[r][col] - want) > 1e-10) identity = false;
      }
    if (identity)
      throw std::invalid_argument("drawn fault unitary is the identity up to phase");
    rf.unitary = u;
    rf.unitary_q1 = g.data_qubit;
    rf.unitary_q2 = g.target_qubit;
  }
  return rf;
}

}  // namespace qec5::faults
