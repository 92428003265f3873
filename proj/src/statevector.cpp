#include "qec5/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qec5 {

namespace {

constexpr std::size_t kMaxQubits = 21;
constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

StateVector::StateVector(std::size_t qubit_count) : qubit_count_(qubit_count) {
  if (qubit_count < 1 || qubit_count > kMaxQubits)
    throw std::invalid_argument("StateVector: qubit count must be in 1..21");
  amps_.assign(std::uint64_t(1) << qubit_count, cxd(0.0, 0.0));
  amps_[0] = 1.0;
}

StateVector StateVector::basis_state(std::size_t qubit_count, std::uint64_t index) {
  StateVector s(qubit_count);
  if (index >= s.dim())
    throw std::invalid_argument("basis_state: index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::basis_state(std::size_t qubit_count, const std::string& bits) {
  if (bits.size() != qubit_count)
    throw std::invalid_argument("basis_state: bit string length must equal qubit count");
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("basis_state: bits must be '0' or '1'");
    index = (index << 1) | std::uint64_t(c == '1');
  }
  return basis_state(qubit_count, index);
}

void StateVector::check_qubit(std::size_t q) const {
  if (q >= qubit_count_)
    throw std::invalid_argument("qubit index out of range");
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cxd& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  double n = norm();
  if (n < 1e-12) throw std::invalid_argument("normalize: zero state");
  double inv = 1.0 / n;
  for (cxd& a : amps_) a *= inv;
}

void StateVector::apply_r(std::size_t q) {
  check_qubit(q);
  const std::uint64_t m = mask(q);
  const std::uint64_t d = dim();
  for (std::uint64_t base = 0; base < d; base += m << 1) {
    for (std::uint64_t lo = base; lo < base + m; ++lo) {
      const cxd a0 = amps_[lo];
      const cxd a1 = amps_[lo | m];
      amps_[lo] = kInvSqrt2 * (a0 + a1);
      amps_[lo | m] = kInvSqrt2 * (a0 - a1);
    }
  }
}

void StateVector::apply_pauli(std::size_t q, PauliKind k) {
  check_qubit(q);
  if (k == PauliKind::I) return;
  const std::uint64_t m = mask(q);
  const std::uint64_t d = dim();
  const Mat2 u = pauli_matrix(k);
  for (std::uint64_t base = 0; base < d; base += m << 1) {
    for (std::uint64_t lo = base; lo < base + m; ++lo) {
      const cxd a0 = amps_[lo];
      const cxd a1 = amps_[lo | m];
      amps_[lo] = u[0][0] * a0 + u[0][1] * a1;
      amps_[lo | m] = u[1][0] * a0 + u[1][1] * a1;
    }
  }
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target)
    throw std::invalid_argument("apply_cnot: control and target must differ");
  const std::uint64_t cm = mask(control);
  const std::uint64_t tm = mask(target);
  const std::uint64_t d = dim();
  for (std::uint64_t i = 0; i < d; ++i)
    if ((i & cm) && !(i & tm)) std::swap(amps_[i], amps_[i | tm]);
}

void StateVector::apply_two_qubit_unitary(std::size_t q1, std::size_t q2, const Mat4& u) {
  check_qubit(q1);
  check_qubit(q2);
  if (q1 == q2)
    throw std::invalid_argument("apply_two_qubit_unitary: qubits must differ");
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      cxd s(0.0, 0.0);
      for (int k = 0; k < 4; ++k) s += std::conj(u[k][r]) * u[k][c];
      if (std::abs(s - (r == c ? 1.0 : 0.0)) > 1e-10)
        throw std::invalid_argument("apply_two_qubit_unitary: matrix is not unitary");
    }
  }
  const std::uint64_t m1 = mask(q1);
  const std::uint64_t m2 = mask(q2);
  const std::uint64_t d = dim();
  for (std::uint64_t i = 0; i < d; ++i) {
    if (i & (m1 | m2)) continue;
    const std::uint64_t idx[4] = {i, i | m2, i | m1, i | m1 | m2};
    cxd v[4];
    for (int k = 0; k < 4; ++k) v[k] = amps_[idx[k]];
    for (int r = 0; r < 4; ++r) {
      cxd s(0.0, 0.0);
      for (int c = 0; c < 4; ++c) s += u[r][c] * v[c];
      amps_[idx[r]] = s;
    }
  }
}

MeasurementRecord StateVector::measure_qubit(std::size_t q, Rng& rng) {
  check_qubit(q);
  const std::uint64_t m = mask(q);
  const std::uint64_t d = dim();
  double p1 = 0.0;
  for (std::uint64_t i = 0; i < d; ++i)
    if (i & m) p1 += std::norm(amps_[i]);
  const int outcome = rng.uniform() < p1 ? 1 : 0;
  const double p = outcome ? p1 : 1.0 - p1;
  const double inv = 1.0 / std::sqrt(p);
  for (std::uint64_t i = 0; i < d; ++i) {
    if (((i & m) != 0) != (outcome != 0))
      amps_[i] = 0.0;
    else
      amps_[i] *= inv;
  }
  return {q, outcome, p};
}

std::pair<std::uint64_t, StateVector> StateVector::measure_tail_and_drop(
    std::size_t count, Rng& rng) {
  if (count < 1 || count >= qubit_count_)
    throw std::invalid_argument("measure_tail_and_drop: count must be in 1..qubit_count-1");
  const std::uint64_t tail_dim = std::uint64_t(1) << count;
  const std::uint64_t head_dim = dim() >> count;

  std::vector<double> p(tail_dim, 0.0);
  for (std::uint64_t h = 0; h < head_dim; ++h) {
    const std::uint64_t base = h << count;
    for (std::uint64_t b = 0; b < tail_dim; ++b) p[b] += std::norm(amps_[base | b]);
  }

  double total = 0.0;
  for (double v : p) total += v;
  const double target = rng.uniform() * total;

  std::uint64_t picked = tail_dim - 1;
  double cum = 0.0;
  for (std::uint64_t b = 0; b < tail_dim; ++b) {
    cum += p[b];
    if (target < cum) {
      picked = b;
      break;
    }
  }
  // Rounding can leave target >= cum on the last pass; land on a bin that
  // actually carries probability.
  while (picked > 0 && p[picked] == 0.0) --picked;

  StateVector head(qubit_count_ - count);
  const double inv = 1.0 / std::sqrt(p[picked]);
  for (std::uint64_t h = 0; h < head_dim; ++h)
    head.amps_[h] = amps_[(h << count) | picked] * inv;
  return {picked, head};
}

std::map<std::string, double> StateVector::outcome_distribution(
    const std::vector<std::size_t>& qubits) const {
  if (qubits.empty() || qubits.size() > qubit_count_)
    throw std::invalid_argument("outcome_distribution: bad qubit list");
  std::vector<std::uint64_t> masks(qubits.size());
  for (std::size_t j = 0; j < qubits.size(); ++j) {
    check_qubit(qubits[j]);
    for (std::size_t k = 0; k < j; ++k)
      if (qubits[k] == qubits[j])
        throw std::invalid_argument("outcome_distribution: duplicate qubit");
    masks[j] = mask(qubits[j]);
  }

  std::vector<double> p(std::uint64_t(1) << qubits.size(), 0.0);
  const std::uint64_t d = dim();
  for (std::uint64_t i = 0; i < d; ++i) {
    std::uint64_t out = 0;
    for (std::uint64_t m : masks) out = (out << 1) | std::uint64_t((i & m) != 0);
    p[out] += std::norm(amps_[i]);
  }

  std::map<std::string, double> dist;
  for (std::uint64_t out = 0; out < p.size(); ++out) {
    if (p[out] <= 0.0) continue;
    std::string key(qubits.size(), '0');
    for (std::size_t j = 0; j < qubits.size(); ++j)
      if (out & (std::uint64_t(1) << (qubits.size() - 1 - j))) key[j] = '1';
    dist.emplace(std::move(key), p[out]);
  }
  return dist;
}

cxd overlap(const StateVector& a, const StateVector& b) {
  if (a.qubit_count() != b.qubit_count())
    throw std::invalid_argument("overlap: qubit counts differ");
  cxd s(0.0, 0.0);
  const std::uint64_t d = a.dim();
  for (std::uint64_t i = 0; i < d; ++i) s += std::conj(a.amp(i)) * b.amp(i);
  return s;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(overlap(a, b));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const std::size_t n = a.qubit_count() + b.qubit_count();
  if (n > kMaxQubits)
    throw std::invalid_argument("tensor: product exceeds 21 qubits");
  StateVector out(n);
  const std::uint64_t db = b.dim();
  const std::size_t nb = b.qubit_count();
  for (std::uint64_t ia = 0; ia < a.dim(); ++ia) {
    const cxd va = a.amp(ia);
    const std::uint64_t base = ia << nb;
    for (std::uint64_t ib = 0; ib < db; ++ib) out.amp(base | ib) = va * b.amp(ib);
  }
  return out;
}

StateVector restrict_to(const StateVector& s, const std::vector<std::size_t>& keep) {
  const std::size_t n = s.qubit_count();
  if (keep.empty() || keep.size() > n)
    throw std::invalid_argument("restrict_to: bad keep list");
  for (std::size_t j = 0; j < keep.size(); ++j) {
    if (keep[j] >= n) throw std::invalid_argument("restrict_to: qubit out of range");
    if (j > 0 && keep[j] <= keep[j - 1])
      throw std::invalid_argument("restrict_to: keep list must be strictly ascending");
  }
  if (keep.size() == n) return s;

  std::vector<std::size_t> dropped;
  for (std::size_t q = 0, j = 0; q < n; ++q) {
    if (j < keep.size() && keep[j] == q)
      ++j;
    else
      dropped.push_back(q);
  }

  auto bit = [n](std::uint64_t i, std::size_t q) -> std::uint64_t {
    return (i >> (n - 1 - q)) & 1;
  };

  // Probability mass per bit pattern of the dropped qubits.
  std::vector<double> mass(std::uint64_t(1) << dropped.size(), 0.0);
  const std::uint64_t d = s.dim();
  for (std::uint64_t i = 0; i < d; ++i) {
    std::uint64_t pat = 0;
    for (std::size_t q : dropped) pat = (pat << 1) | bit(i, q);
    mass[pat] += std::norm(s.amp(i));
  }

  std::uint64_t best = 0;
  for (std::uint64_t pat = 1; pat < mass.size(); ++pat)
    if (mass[pat] > mass[best]) best = pat;

  double minority = 0.0;
  for (std::uint64_t pat = 0; pat < mass.size(); ++pat)
    if (pat != best) minority += mass[pat];
  if (minority > 1e-10)
    throw std::invalid_argument(
        "restrict_to: dropped qubits are not in a definite basis state");

  StateVector out(keep.size());
  const double inv = 1.0 / std::sqrt(mass[best]);
  for (std::uint64_t i = 0; i < d; ++i) {
    std::uint64_t pat = 0;
    for (std::size_t q : dropped) pat = (pat << 1) | bit(i, q);
    if (pat != best) continue;
    std::uint64_t oi = 0;
    for (std::size_t q : keep) oi = (oi << 1) | bit(i, q);
    out.amp(oi) = s.amp(i) * inv;
  }
  return out;
}

Mat4 haar_unitary4(Rng& rng) {
  // Complex Gaussian matrix followed by modified Gram-Schmidt on columns.
  // The diagonal of the implicit R factor comes out real-positive, which is
  // exactly the convention that makes the Q factor Haar-distributed.
  cxd g[4][4];
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r)
      g[r][c] = cxd(rng.gaussian(), rng.gaussian()) * kInvSqrt2;

  Mat4 u{};
  for (int j = 0; j < 4; ++j) {
    cxd v[4];
    for (int r = 0; r < 4; ++r) v[r] = g[r][j];
    for (int k = 0; k < j; ++k) {
      cxd dot(0.0, 0.0);
      for (int r = 0; r < 4; ++r) dot += std::conj(u[r][k]) * v[r];
      for (int r = 0; r < 4; ++r) v[r] -= dot * u[r][k];
    }
    double nrm = 0.0;
    for (int r = 0; r < 4; ++r) nrm += std::norm(v[r]);
    nrm = std::sqrt(nrm);
    for (int r = 0; r < 4; ++r) u[r][j] = v[r] / nrm;
  }
  return u;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return out;
}

}  // namespace qec5
