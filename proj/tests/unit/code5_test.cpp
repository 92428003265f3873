#include <doctest.h>

#include <bit>
#include <cmath>
#include <set>

#include "qec5/code5.hpp"
#include "qec5/protocol.hpp"

using namespace qec5;

namespace {

// Commutation oracle at the matrix level: do the 2x2 operators commute or
// anticommute? Every pair from {I, X, Y, Z} does one or the other.
bool anticommute(PauliKind a, PauliKind b) {
  const Mat2 ma = pauli_matrix(a), mb = pauli_matrix(b);
  double comm = 0.0, anti = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cxd ab(0.0, 0.0), ba(0.0, 0.0);
      for (int k = 0; k < 2; ++k) {
        ab += ma[i][k] * mb[k][j];
        ba += mb[i][k] * ma[k][j];
      }
      comm += std::abs(ab - ba);
      anti += std::abs(ab + ba);
    }
  REQUIRE((comm < 1e-12 || anti < 1e-12));
  return anti < 1e-12;
}

// Syndrome of a single-qubit error, derived from first principles: bit r is
// set iff the error anticommutes with parity check r.
std::array<int, 4> algebraic_syndrome(int qubit, PauliKind k) {
  std::array<int, 4> bits{};
  const auto& checks = code5::parity_checks();
  for (int r = 0; r < 4; ++r)
    bits[r] = anticommute(checks[r][qubit], k) ? 1 : 0;
  return bits;
}

void apply_string(StateVector& s, const std::array<PauliKind, 5>& ops) {
  for (std::size_t q = 0; q < 5; ++q)
    if (ops[q] != PauliKind::I) s.apply_pauli(q, ops[q]);
}

}  // namespace

TEST_CASE("codeword term table structure") {
  const auto& terms = code5::codeword_terms();
  REQUIRE(terms.size() == 16);

  int minus = 0;
  std::set<std::string> seen;
  for (const auto& t : terms) {
    std::string bits = t.bits;
    REQUIRE(bits.size() == 5);
    int ones = 0;
    for (char c : bits) ones += c == '1';
    CHECK(ones % 2 == 0);  // even-parity component
    CHECK((t.sign == 1 || t.sign == -1));
    if (t.sign == -1) ++minus;
    CHECK(seen.insert(bits).second);
  }
  CHECK(minus == 10);
  CHECK(terms[0].bits == std::string("00000"));
  CHECK(terms[0].sign == 1);
}

TEST_CASE("odd component is the bitwise complement of the even one") {
  const StateVector even = code5::codeword_even();
  const StateVector odd = code5::codeword_odd();
  CHECK(even.norm() == doctest::Approx(1.0));
  CHECK(odd.norm() == doctest::Approx(1.0));
  for (std::uint64_t i = 0; i < 32; ++i)
    CHECK(std::abs(even.amp(i) - odd.amp(~i & 0x1f)) < 1e-15);
}

TEST_CASE("logical states are orthonormal combinations of the components") {
  const StateVector l0 = code5::logical_zero();
  const StateVector l1 = code5::logical_one();
  CHECK(l0.norm() == doctest::Approx(1.0));
  CHECK(l1.norm() == doctest::Approx(1.0));
  CHECK(std::abs(overlap(l0, l1)) < 1e-12);

  // (even +- odd)/sqrt2
  const StateVector even = code5::codeword_even();
  const StateVector odd = code5::codeword_odd();
  for (std::uint64_t i = 0; i < 32; ++i) {
    CHECK(std::abs(l0.amp(i) - (even.amp(i) + odd.amp(i)) * std::sqrt(0.5)) < 1e-15);
    CHECK(std::abs(l1.amp(i) - (even.amp(i) - odd.amp(i)) * std::sqrt(0.5)) < 1e-15);
  }
}

TEST_CASE("encode is linear, normalizing and rejects the zero vector") {
  const StateVector l0 = code5::logical_zero();
  const StateVector l1 = code5::logical_one();

  CHECK(std::abs(overlap(code5::encode({1.0, 0.0}), l0) - 1.0) < 1e-12);
  CHECK(std::abs(overlap(code5::encode({0.0, 1.0}), l1) - 1.0) < 1e-12);

  const cxd a(0.6, 0.0), b(0.0, 0.8);
  const StateVector s = code5::encode({a, b});
  for (std::uint64_t i = 0; i < 32; ++i)
    CHECK(std::abs(s.amp(i) - (a * l0.amp(i) + b * l1.amp(i))) < 1e-12);

  // Unnormalized input is scaled, not rejected.
  const StateVector t = code5::encode({2.0, 0.0});
  CHECK(std::abs(overlap(t, l0) - 1.0) < 1e-12);

  CHECK_THROWS_AS(code5::encode({0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("parity checks stabilize the codespace with eigenvalue +1") {
  const auto& checks = code5::parity_checks();
  for (const auto& ops : checks) {
    for (const StateVector& psi :
         {code5::logical_zero(), code5::logical_one(), code5::encode({0.6, cxd(0.0, 0.8)})}) {
      StateVector moved = psi;
      apply_string(moved, ops);
      CHECK(std::abs(overlap(psi, moved) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("single-error syndromes: algebra, simulation table and bijection agree") {
  std::set<int> values;
  for (const protocol::SyndromeRow& row : protocol::syndrome_table()) {
    const auto bits = algebraic_syndrome(row.qubit, row.kind);
    for (int r = 0; r < 4; ++r) CHECK(bits[r] == row.syndrome.bits[r]);

    int v = 0;
    for (int r = 0; r < 4; ++r) v = (v << 1) | bits[r];
    CHECK(v != 0);
    CHECK(values.insert(v).second);  // all fifteen distinct
  }
  CHECK(values.size() == 15);
}

TEST_CASE("logical_fidelity matches direct overlap") {
  const code5::LogicalAmplitudes l{0.8, cxd(0.0, 0.6)};
  const StateVector s = code5::encode(l);
  CHECK(code5::logical_fidelity(s, s) == doctest::Approx(1.0));
  CHECK(code5::logical_fidelity(code5::logical_zero(), s) == doctest::Approx(0.64));
  CHECK_THROWS_AS(code5::logical_fidelity(StateVector(3), s), std::invalid_argument);
}
