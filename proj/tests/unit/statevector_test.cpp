#include <doctest.h>

#include <cmath>
#include <complex>

#include "qec5/statevector.hpp"

using namespace qec5;

namespace {

StateVector random_state(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  StateVector s(n);
  for (std::uint64_t i = 0; i < s.dim(); ++i)
    s.amp(i) = cxd(rng.gaussian(), rng.gaussian());
  s.normalize();
  return s;
}

}  // namespace

TEST_CASE("basis states and bit order") {
  // Qubit 0 is the most significant position of the ket string.
  const StateVector s = StateVector::basis_state(2, "10");
  CHECK(s.amp(0) == cxd(0.0, 0.0));
  CHECK(s.amp(2) == cxd(1.0, 0.0));
  CHECK(StateVector::basis_state(3, std::uint64_t(5)).amp(5) == cxd(1.0, 0.0));
  CHECK(StateVector(3).amp(0) == cxd(1.0, 0.0));
  CHECK(StateVector(3).dim() == 8);

  CHECK_THROWS_AS(StateVector::basis_state(2, "102"), std::invalid_argument);
  CHECK_THROWS_AS(StateVector::basis_state(2, "1"), std::invalid_argument);
  CHECK_THROWS_AS(StateVector::basis_state(2, std::uint64_t(4)), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(0), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(22), std::invalid_argument);
}

TEST_CASE("norm and normalize") {
  StateVector s(1);
  s.amp(0) = cxd(3.0, 0.0);
  s.amp(1) = cxd(0.0, 4.0);
  CHECK(s.norm() == doctest::Approx(5.0));
  s.normalize();
  CHECK(s.norm() == doctest::Approx(1.0));

  StateVector z(1);
  z.amp(0) = 0.0;
  CHECK_THROWS_AS(z.normalize(), std::invalid_argument);
}

TEST_CASE("pauli actions on basis states") {
  StateVector s = StateVector::basis_state(2, "01");
  s.apply_pauli(0, PauliKind::X);
  CHECK(s.amp(3) == cxd(1.0, 0.0));  // |01> -> |11>

  StateVector t = StateVector::basis_state(1, "1");
  t.apply_pauli(0, PauliKind::Y);  // phase flip
  CHECK(t.amp(1) == cxd(-1.0, 0.0));
  t = StateVector::basis_state(1, "0");
  t.apply_pauli(0, PauliKind::Y);
  CHECK(t.amp(0) == cxd(1.0, 0.0));
}

TEST_CASE("Z equals X after Y, and squares to minus identity") {
  const StateVector s = random_state(3, 11);

  StateVector a = s;
  a.apply_pauli(1, PauliKind::Z);
  StateVector b = s;
  b.apply_pauli(1, PauliKind::Y);
  b.apply_pauli(1, PauliKind::X);
  CHECK(std::abs(overlap(a, b) - 1.0) < 1e-12);

  StateVector c = s;
  c.apply_pauli(1, PauliKind::Z);
  c.apply_pauli(1, PauliKind::Z);
  CHECK(std::abs(overlap(s, c) + 1.0) < 1e-12);  // Z^2 = -I
}

TEST_CASE("rotation gate is involutory and swaps X with Y under conjugation") {
  const StateVector s = random_state(4, 23);

  StateVector a = s;
  a.apply_r(2);
  a.apply_r(2);
  CHECK(std::abs(overlap(s, a) - 1.0) < 1e-12);

  // R X R = Y
  StateVector lhs = s;
  lhs.apply_r(2);
  lhs.apply_pauli(2, PauliKind::X);
  lhs.apply_r(2);
  StateVector rhs = s;
  rhs.apply_pauli(2, PauliKind::Y);
  CHECK(std::abs(overlap(lhs, rhs) - 1.0) < 1e-12);
}

TEST_CASE("cnot truth table works for any qubit order") {
  StateVector s = StateVector::basis_state(2, "10");
  s.apply_cnot(0, 1);
  CHECK(s.amp(3) == cxd(1.0, 0.0));  // |10> -> |11>

  s = StateVector::basis_state(2, "01");
  s.apply_cnot(1, 0);  // control is the lower-order qubit
  CHECK(s.amp(3) == cxd(1.0, 0.0));

  s = StateVector::basis_state(2, "01");
  s.apply_cnot(0, 1);
  CHECK(s.amp(1) == cxd(1.0, 0.0));  // control 0: no action

  CHECK_THROWS_AS(StateVector(2).apply_cnot(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(2).apply_cnot(0, 2), std::invalid_argument);
}

TEST_CASE("two-qubit unitary agrees with pauli kernels and rejects garbage") {
  const StateVector s = random_state(5, 37);

  // kron(X, Y) on (q1, q2) must equal X on q1 followed by Y on q2.
  StateVector a = s;
  a.apply_two_qubit_unitary(1, 3, kron(pauli_matrix(PauliKind::X),
                                       pauli_matrix(PauliKind::Y)));
  StateVector b = s;
  b.apply_pauli(1, PauliKind::X);
  b.apply_pauli(3, PauliKind::Y);
  CHECK(std::abs(overlap(a, b) - 1.0) < 1e-12);

  // The CNOT matrix in the (control, target) local basis.
  Mat4 cn{};
  cn[0][0] = cn[1][1] = cn[2][3] = cn[3][2] = 1.0;
  StateVector c = s;
  c.apply_two_qubit_unitary(4, 0, cn);
  StateVector d = s;
  d.apply_cnot(4, 0);
  CHECK(std::abs(overlap(c, d) - 1.0) < 1e-12);

  Mat4 bad{};
  bad[0][0] = 2.0;
  StateVector e = s;
  CHECK_THROWS_AS(e.apply_two_qubit_unitary(0, 1, bad), std::invalid_argument);
  CHECK_THROWS_AS(e.apply_two_qubit_unitary(2, 2, cn), std::invalid_argument);
}

TEST_CASE("haar unitaries are unitary and seed-deterministic") {
  Rng r1(99), r2(99), r3(100);
  const Mat4 u = haar_unitary4(r1);
  const Mat4 v = haar_unitary4(r2);
  const Mat4 w = haar_unitary4(r3);

  double same = 0.0, diff = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cxd dot(0.0, 0.0);
      for (int k = 0; k < 4; ++k) dot += std::conj(u[k][i]) * u[k][j];
      CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-10);
      same += std::abs(u[i][j] - v[i][j]);
      diff += std::abs(u[i][j] - w[i][j]);
    }
  CHECK(same == 0.0);
  CHECK(diff > 1e-3);
}

TEST_CASE("single-qubit measurement collapses and renormalizes") {
  StateVector s(2);
  s.amp(0) = std::sqrt(0.25);
  s.amp(2) = std::sqrt(0.75);

  Rng rng(5);
  const MeasurementRecord rec = s.measure_qubit(0, rng);
  CHECK((rec.outcome == 0 || rec.outcome == 1));
  CHECK(rec.probability == doctest::Approx(rec.outcome ? 0.75 : 0.25));
  CHECK(s.norm() == doctest::Approx(1.0));
  CHECK(std::abs(s.amp(rec.outcome ? 2 : 0)) == doctest::Approx(1.0));

  // Same seed, same trajectory.
  StateVector t(2);
  t.amp(0) = std::sqrt(0.25);
  t.amp(2) = std::sqrt(0.75);
  Rng rng2(5);
  CHECK(t.measure_qubit(0, rng2).outcome == rec.outcome);
}

TEST_CASE("tail measurement matches the marginal and drops the tail") {
  // Entangled pair across head (qubit 0) and tail (qubit 1): outcomes must
  // correlate and the head must collapse accordingly.
  StateVector s(2);
  s.amp(0) = std::sqrt(0.5);
  s.amp(3) = std::sqrt(0.5);
  Rng rng(77);
  auto [bits, head] = s.measure_tail_and_drop(1, rng);
  CHECK(head.qubit_count() == 1);
  CHECK(std::abs(head.amp(bits)) == doctest::Approx(1.0));

  // Definite tail: outcome is forced.
  StateVector p = tensor(StateVector::basis_state(1, "1"), StateVector::basis_state(2, "01"));
  Rng rng2(1);
  auto [bits2, head2] = p.measure_tail_and_drop(2, rng2);
  CHECK(bits2 == 0b01);
  CHECK(std::abs(head2.amp(1)) == doctest::Approx(1.0));

  StateVector q(2);
  q.amp(0) = 1.0;
  CHECK_THROWS_AS(q.measure_tail_and_drop(2, rng2), std::invalid_argument);
}

TEST_CASE("outcome distribution lists only reachable patterns") {
  StateVector s(2);
  s.amp(0) = std::sqrt(0.5);
  s.amp(3) = std::sqrt(0.5);

  const auto full = s.outcome_distribution({0, 1});
  REQUIRE(full.size() == 2);
  CHECK(full.at("00") == doctest::Approx(0.5));
  CHECK(full.at("11") == doctest::Approx(0.5));

  const auto swapped = s.outcome_distribution({1, 0});
  CHECK(swapped.count("00") == 1);

  const auto one = s.outcome_distribution({1});
  CHECK(one.at("0") == doctest::Approx(0.5));
  CHECK(one.at("1") == doctest::Approx(0.5));

  CHECK_THROWS_AS(s.outcome_distribution({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(s.outcome_distribution({2}), std::invalid_argument);
}

TEST_CASE("tensor and restrict are inverse on product states") {
  const StateVector a = random_state(2, 3);
  const StateVector b = random_state(3, 4);
  const StateVector ab = tensor(a, b);
  REQUIRE(ab.qubit_count() == 5);

  // Collapse the b factor by hand: restrict back to a requires b definite,
  // so use a basis b.
  const StateVector ab2 = tensor(a, StateVector::basis_state(3, "101"));
  const StateVector a2 = restrict_to(ab2, {0, 1});
  CHECK(std::abs(overlap(a, a2) - 1.0) < 1e-12);

  // Entangled drop must throw.
  StateVector bell(2);
  bell.amp(0) = std::sqrt(0.5);
  bell.amp(3) = std::sqrt(0.5);
  CHECK_THROWS_AS(restrict_to(bell, {0}), std::invalid_argument);
  CHECK_THROWS_AS(restrict_to(bell, {1, 0}), std::invalid_argument);
}

TEST_CASE("overlap is conjugate-linear in its first argument") {
  StateVector a(1), b(1);
  a.amp(0) = cxd(0.0, 1.0);
  b.amp(0) = cxd(1.0, 0.0);
  CHECK(overlap(a, b) == cxd(0.0, -1.0));
  CHECK(fidelity(a, b) == doctest::Approx(1.0));
}
