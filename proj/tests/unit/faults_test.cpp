#include <doctest.h>

#include <map>
#include <set>

#include "qec5/faults.hpp"

using namespace qec5;

TEST_CASE("exhaustive case list: count, order, uniqueness") {
  const network::Schedule s = network::build_schedule();
  const auto cases = faults::all_pauli_fault_cases(s);
  REQUIRE(cases.size() == 555);

  // The first fifteen are input errors in display order.
  CHECK(cases[0].case_id == "input.d0:X");
  CHECK(cases[4].case_id == "input.d4:X");
  CHECK(cases[5].case_id == "input.d0:Y");
  CHECK(cases[14].case_id == "input.d4:Z");
  for (int i = 0; i < 15; ++i) CHECK(cases[i].input_error.has_value());
  CHECK(cases[15].fault.has_value());

  std::set<std::string> ids;
  std::map<std::string, int> per_location;
  for (const auto& c : cases) {
    CHECK(ids.insert(c.case_id).second);
    if (c.fault) ++per_location[c.fault->location_id];
  }
  // 2 placements x 15 Pauli pairs per CNOT, 2 x 3 per rotation.
  CHECK(per_location.at("blk1.cnot.d0.a3") == 30);
  CHECK(per_location.at("blk2.cnot.d4.a3") == 30);
  CHECK(per_location.at("rot1.d0") == 6);
  CHECK(per_location.at("rot2.d4") == 6);
}

TEST_CASE("case ids parse back to themselves") {
  const network::Schedule s = network::build_schedule();
  for (const auto& c : faults::all_pauli_fault_cases(s)) {
    const faults::FaultCase back = faults::parse_case_id(s, c.case_id);
    CHECK(back.case_id == c.case_id);
    CHECK(back.fault.has_value() == c.fault.has_value());
    CHECK(back.input_error.has_value() == c.input_error.has_value());
  }

  const faults::FaultCase u = faults::parse_case_id(s, "blk2.cnot.d1.a0:before:u42");
  REQUIRE(u.fault.has_value());
  CHECK(u.case_id == "blk2.cnot.d1.a0:before:u42");
  CHECK(std::holds_alternative<faults::RandomUnitary>(u.fault->payload));
}

TEST_CASE("malformed case ids are rejected") {
  const network::Schedule s = network::build_schedule();
  for (const char* id : {
           "input.d5:X",                     // no such data qubit
           "input.d0:I",                     // identity is not an error
           "input.d0:Q",                     // unknown letter
           "blk1.cnot.d9.a3:before:XX",      // unknown location
           "blk1.cnot.d0.a3:sideways:XX",    // unknown placement
           "blk1.cnot.d0.a3:before:X",       // arity mismatch (CNOT wants two)
           "rot1.d0:after:XY",               // arity mismatch (rotation wants one)
           "blk1.cnot.d0.a3:before:II",      // no actual fault
           "rot1.d0:after:I",                // same, single qubit
           "rot1.d0:after:u7",               // unitaries need a CNOT
           "blk1.cnot.d0.a3:before:uXY",     // bad seed
           "blk1.cnot.d0.a3:before",         // missing payload
           "",                               // nothing at all
       })
    CHECK_THROWS_AS(faults::parse_case_id(s, id), std::invalid_argument);
}

TEST_CASE("resolution maps operands onto circuit qubits") {
  const network::Schedule s = network::build_schedule();
  const network::GateOp& g = network::gate_by_location(s, "blk1.cnot.d0.a3");

  auto resolve = [&](const std::string& id) {
    return faults::resolve_fault(s, faults::parse_case_id(s, id));
  };

  const auto both = resolve("blk1.cnot.d0.a3:before:XY");
  CHECK(both.gate_serial == g.serial);
  CHECK(both.placement == network::Placement::Before);
  REQUIRE(both.paulis.size() == 2);
  CHECK(both.paulis[0] == std::pair<std::size_t, PauliKind>{0, PauliKind::X});
  CHECK(both.paulis[1] == std::pair<std::size_t, PauliKind>{std::size_t(g.target_qubit),
                                                            PauliKind::Y});

  const auto control_only = resolve("blk1.cnot.d0.a3:after:ZI");
  REQUIRE(control_only.paulis.size() == 1);
  CHECK(control_only.paulis[0].first == 0);
  CHECK(control_only.placement == network::Placement::After);

  const auto target_only = resolve("blk1.cnot.d0.a3:before:IX");
  REQUIRE(target_only.paulis.size() == 1);
  CHECK(target_only.paulis[0].first == std::size_t(g.target_qubit));

  const auto rot = resolve("rot2.d4:after:Z");
  CHECK(rot.paulis.size() == 1);
  CHECK(rot.paulis[0] == std::pair<std::size_t, PauliKind>{4, PauliKind::Z});

  const auto input = resolve("input.d3:Y");
  CHECK(input.gate_serial == -1);
  REQUIRE(input.paulis.size() == 1);
  CHECK(input.paulis[0] == std::pair<std::size_t, PauliKind>{3, PauliKind::Y});
}

TEST_CASE("random-unitary faults are seeded and reproducible") {
  const network::Schedule s = network::build_schedule();
  const auto spec = faults::random_unitary_fault(s, "blk2.cnot.d1.a0", 42);
  CHECK(faults::case_id_for(spec) == "blk2.cnot.d1.a0:before:u42");

  const faults::FaultCase c{faults::case_id_for(spec), spec, std::nullopt};
  const auto a = faults::resolve_fault(s, c);
  const auto b = faults::resolve_fault(s, c);
  REQUIRE(a.unitary.has_value());
  REQUIRE(b.unitary.has_value());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK((*a.unitary)[i][j] == (*b.unitary)[i][j]);

  const network::GateOp& g = network::gate_by_location(s, "blk2.cnot.d1.a0");
  CHECK(a.unitary_q1 == std::size_t(g.data_qubit));
  CHECK(a.unitary_q2 == std::size_t(g.target_qubit));

  const auto spec2 = faults::random_unitary_fault(s, "blk2.cnot.d1.a0", 43);
  const auto c2 = faults::FaultCase{faults::case_id_for(spec2), spec2, std::nullopt};
  const auto other = faults::resolve_fault(s, c2);
  double diff = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) diff += std::abs((*a.unitary)[i][j] - (*other.unitary)[i][j]);
  CHECK(diff > 1e-3);

  CHECK_THROWS_AS(faults::random_unitary_fault(s, "rot1.d0", 1), std::invalid_argument);
}

TEST_CASE("a case must carry exactly one fault") {
  const network::Schedule s = network::build_schedule();
  faults::FaultCase neither{"x", std::nullopt, std::nullopt};
  CHECK_THROWS_AS(faults::resolve_fault(s, neither), std::invalid_argument);

  faults::FaultCase both = faults::parse_case_id(s, "input.d0:X");
  both.fault = faults::FaultSpec{"rot1.d0", network::Placement::Before,
                                 faults::PauliAssignment{{PauliKind::X}}};
  CHECK_THROWS_AS(faults::resolve_fault(s, both), std::invalid_argument);
}
