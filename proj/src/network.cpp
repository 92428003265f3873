#include "qec5/network.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qec5::network {

namespace {

// Which two data qubits feed each register, per block. Block-1 couplings see
// their data qubit in the computational frame, block-2 couplings inside the
// qubit's rotation window; together the four registers realize the
// parity_checks() strings of code5.
constexpr std::array<std::array<int, 2>, 4> kBlock1Sources = {{{2, 4}, {0, 3}, {1, 4}, {0, 2}}};
constexpr std::array<std::array<int, 2>, 4> kBlock2Sources = {{{0, 1}, {1, 2}, {2, 3}, {3, 4}}};

// Negative-control variant: the d1 and d2 block-1 couplings swap registers
// (d1 now feeds a3, d2 feeds a2). Structurally legal, but d2's new coupling
// lands inside q2's rotation window, so registers a2 and a3 stop measuring
// check operators and the syndrome table breaks.
constexpr std::array<std::array<int, 2>, 4> kBlock1SourcesCorrupt = {{{2, 4}, {0, 3}, {2, 4}, {0, 1}}};

// Registers are read out in sequence; each occupies one block-1 CNOT column
// and one block-2 CNOT column.
constexpr std::array<int, 4> kRegisterOrder = {3, 2, 1, 0};
constexpr std::array<std::array<int, 2>, 4> kCnotColumns = {{{0, 2}, {4, 5}, {7, 8}, {10, 11}}};

// The ten R gates as (column, layer, qubit). A qubit's window opens (rot1)
// just before the first block-2 coupling that needs it and closes (rot2) once
// no later register does; consecutive registers share one rotated qubit, so
// a closing and an opening R pair up in each interior rotation column.
struct RotPlan {
  int column;
  int layer;
  int qubit;
};
constexpr std::array<RotPlan, 10> kRotations = {{
    {1, 1, 3},
    {1, 1, 4},
    {3, 2, 4},
    {3, 1, 2},
    {6, 2, 3},
    {6, 1, 1},
    {9, 2, 2},
    {9, 1, 0},
    {12, 2, 1},
    {12, 2, 0},
}};

constexpr int kColumns = 13;

bool is_rotation_column(int c) { return c == 1 || c == 3 || c == 6 || c == 9 || c == 12; }
bool is_block1_column(int c) { return c == 0 || c == 4 || c == 7 || c == 10; }

std::string column_order_name(ColumnOrder o) {
  return o == ColumnOrder::DescendingDataQubit ? "desc" : "asc";
}

ColumnOrder column_order_from_name(const std::string& s) {
  if (s == "desc") return ColumnOrder::DescendingDataQubit;
  if (s == "asc") return ColumnOrder::AscendingDataQubit;
  throw std::invalid_argument("unknown column order '" + s + "'");
}

}  // namespace

Schedule build_schedule(const ScheduleOptions& opts) {
  Schedule s;
  s.options = opts;
  for (std::size_t r = 0; r < 4; ++r) {
    s.registers[r].register_index = r;
    for (std::size_t k = 0; k < 4; ++k)
      s.registers[r].qubit_ids[k] = kFirstAncillaQubit + 4 * r + k;
  }

  const auto& block1 = opts.corrupt_wiring ? kBlock1SourcesCorrupt : kBlock1Sources;

  struct Pending {
    GateKind kind;
    int data_qubit;
    int register_index;  // CNOT only
    int block_no;        // CNOT only
    int layer;           // R only
  };
  std::array<std::vector<Pending>, kColumns> columns;

  for (int step = 0; step < 4; ++step) {
    const int r = kRegisterOrder[step];
    for (int d : block1[r])
      columns[kCnotColumns[step][0]].push_back({GateKind::Cnot, d, r, 1, 0});
    for (int d : kBlock2Sources[r])
      columns[kCnotColumns[step][1]].push_back({GateKind::Cnot, d, r, 2, 0});
  }
  for (const RotPlan& rot : kRotations)
    columns[rot.column].push_back({GateKind::R, rot.qubit, -1, 0, rot.layer});

  std::array<int, 4> next_slot{0, 0, 0, 0};
  int serial = 0;
  for (int c = 0; c < kColumns; ++c) {
    auto& pending = columns[c];
    std::sort(pending.begin(), pending.end(), [&](const Pending& a, const Pending& b) {
      return opts.column_order == ColumnOrder::DescendingDataQubit ? a.data_qubit > b.data_qubit
                                                                   : a.data_qubit < b.data_qubit;
    });
    for (const Pending& p : pending) {
      GateOp g;
      g.kind = p.kind;
      g.column = c;
      g.serial = serial++;
      g.data_qubit = p.data_qubit;
      if (p.kind == GateKind::Cnot) {
        g.register_index = p.register_index;
        g.register_slot = next_slot[p.register_index]++;
        g.target_qubit = int(kFirstAncillaQubit) + 4 * p.register_index + g.register_slot;
        g.location_id = "blk" + std::to_string(p.block_no) + ".cnot.d" +
                        std::to_string(p.data_qubit) + ".a" + std::to_string(p.register_index);
      } else {
        g.register_index = -1;
        g.register_slot = -1;
        g.target_qubit = -1;
        g.location_id = "rot" + std::to_string(p.layer) + ".d" + std::to_string(p.data_qubit);
      }
      s.gates.push_back(std::move(g));
    }
  }
  return s;
}

const GateOp& gate_by_location(const Schedule& s, const std::string& location_id) {
  for (const GateOp& g : s.gates)
    if (g.location_id == location_id) return g;
  throw std::invalid_argument("unknown fault location '" + location_id + "'");
}

std::vector<FaultLocation> enumerate_fault_locations(const Schedule& s) {
  std::vector<FaultLocation> locs;
  for (int q = 0; q < 5; ++q)
    locs.push_back({"input.d" + std::to_string(q), Placement::Before, 1});
  for (const GateOp& g : s.gates) {
    const int arity = g.kind == GateKind::Cnot ? 2 : 1;
    locs.push_back({g.location_id, Placement::Before, arity});
    locs.push_back({g.location_id, Placement::After, arity});
  }
  return locs;
}

namespace {

void apply_fault_payload(StateVector& st, const ResolvedFault& f) {
  if (f.unitary) st.apply_two_qubit_unitary(f.unitary_q1, f.unitary_q2, *f.unitary);
  for (const auto& [q, k] : f.paulis) st.apply_pauli(q, k);
}

}  // namespace

StateVector extraction_pre_measurement(const StateVector& data, const Schedule& s,
                                       const std::optional<ResolvedFault>& fault,
                                       AncillaPreparation prep) {
  if (data.qubit_count() != kDataQubits)
    throw std::invalid_argument("extraction: data state must have 5 qubits");
  if (std::abs(data.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("extraction: data state must be normalized");

  static const StateVector cat16 = [] {
    const StateVector c = ancilla::even_parity_state();
    return tensor(tensor(c, c), tensor(c, c));
  }();

  StateVector st = prep == AncillaPreparation::EvenParity
                       ? tensor(data, cat16)
                       : tensor(data, StateVector(kAncillaQubits));

  if (fault && fault->gate_serial < 0) apply_fault_payload(st, *fault);

  for (const GateOp& g : s.gates) {
    const bool faulted = fault && fault->gate_serial == g.serial;
    if (faulted && fault->placement == Placement::Before) apply_fault_payload(st, *fault);
    if (g.kind == GateKind::R)
      st.apply_r(g.data_qubit);
    else
      st.apply_cnot(g.data_qubit, g.target_qubit);
    if (faulted && fault->placement == Placement::After) apply_fault_payload(st, *fault);
  }
  return st;
}

ExtractionResult run_extraction(const StateVector& data, const Schedule& s,
                                const std::optional<ResolvedFault>& fault, Rng& rng,
                                AncillaPreparation prep) {
  StateVector st = extraction_pre_measurement(data, s, fault, prep);
  auto [bits, post] = st.measure_tail_and_drop(kAncillaQubits, rng);

  ExtractionResult res{Syndrome{}, std::move(post), {}};
  for (std::size_t i = 0; i < kAncillaQubits; ++i)
    res.raw_outcomes[i] = int((bits >> (kAncillaQubits - 1 - i)) & 1);
  for (int r = 0; r < 4; ++r) {
    std::array<int, 4> outcomes;
    for (int k = 0; k < 4; ++k) outcomes[k] = res.raw_outcomes[4 * r + k];
    res.syndrome.bits[r] = ancilla::syndrome_bit(outcomes);
  }
  return res;
}

std::string export_schedule(const Schedule& s) {
  std::ostringstream out;
  out << "# qec5 schedule v1\n";
  out << "options column_order=" << column_order_name(s.options.column_order)
      << " corrupt_wiring=" << (s.options.corrupt_wiring ? 1 : 0) << "\n";
  for (const GateOp& g : s.gates) {
    out << "serial=" << g.serial << " column=" << g.column;
    if (g.kind == GateKind::Cnot) {
      out << " kind=cnot control=" << g.data_qubit << " register=" << g.register_index
          << " slot=" << g.register_slot << " target=" << g.target_qubit;
    } else {
      out << " kind=r qubit=" << g.data_qubit;
    }
    out << " loc=" << g.location_id << "\n";
  }
  return out.str();
}

namespace {

std::map<std::string, std::string> parse_kv_line(const std::string& line) {
  std::map<std::string, std::string> kv;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("schedule parse: bad token '" + tok + "'");
    if (!kv.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second)
      throw std::invalid_argument("schedule parse: duplicate key in '" + line + "'");
  }
  return kv;
}

int parse_int(const std::map<std::string, std::string>& kv, const std::string& key,
              int lo, int hi) {
  const auto it = kv.find(key);
  if (it == kv.end())
    throw std::invalid_argument("schedule parse: missing key '" + key + "'");
  int v;
  try {
    std::size_t pos = 0;
    v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("schedule parse: bad value for '" + key + "'");
  }
  if (v < lo || v > hi)
    throw std::invalid_argument("schedule parse: '" + key + "' out of range");
  return v;
}

}  // namespace

Schedule parse_schedule(const std::string& text) {
  Schedule s;
  for (std::size_t r = 0; r < 4; ++r) {
    s.registers[r].register_index = r;
    for (std::size_t k = 0; k < 4; ++k)
      s.registers[r].qubit_ids[k] = kFirstAncillaQubit + 4 * r + k;
  }

  std::istringstream in(text);
  std::string line;
  bool saw_options = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("options", 0) == 0) {
      auto kv = parse_kv_line(line.substr(7));
      if (kv.count("column_order"))
        s.options.column_order = column_order_from_name(kv.at("column_order"));
      if (kv.count("corrupt_wiring"))
        s.options.corrupt_wiring = kv.at("corrupt_wiring") == "1";
      saw_options = true;
      continue;
    }

    auto kv = parse_kv_line(line);
    const auto kind_it = kv.find("kind");
    if (kind_it == kv.end())
      throw std::invalid_argument("schedule parse: missing key 'kind'");
    const auto loc_it = kv.find("loc");
    if (loc_it == kv.end())
      throw std::invalid_argument("schedule parse: missing key 'loc'");

    GateOp g;
    g.serial = parse_int(kv, "serial", 0, 25);
    g.column = parse_int(kv, "column", 0, kColumns - 1);
    g.location_id = loc_it->second;
    if (kind_it->second == "cnot") {
      g.kind = GateKind::Cnot;
      g.data_qubit = parse_int(kv, "control", 0, 4);
      g.register_index = parse_int(kv, "register", 0, 3);
      g.register_slot = parse_int(kv, "slot", 0, 3);
      g.target_qubit = parse_int(kv, "target", 5, 20);
      if (g.target_qubit != int(kFirstAncillaQubit) + 4 * g.register_index + g.register_slot)
        throw std::invalid_argument("schedule parse: target does not match register/slot");
    } else if (kind_it->second == "r") {
      g.kind = GateKind::R;
      g.data_qubit = parse_int(kv, "qubit", 0, 4);
      g.register_index = -1;
      g.register_slot = -1;
      g.target_qubit = -1;
    } else {
      throw std::invalid_argument("schedule parse: unknown kind '" + kind_it->second + "'");
    }
    s.gates.push_back(std::move(g));
  }
  (void)saw_options;

  if (s.gates.size() != 26)
    throw std::invalid_argument("schedule parse: expected 26 gates");
  std::sort(s.gates.begin(), s.gates.end(),
            [](const GateOp& a, const GateOp& b) { return a.serial < b.serial; });

  // Structural invariants: serials form a permutation refining the column
  // order, locations are unique, 16 CNOTs / 10 rotations in their column
  // sets, each register receives four CNOTs on distinct slots, two per block.
  std::set<std::string> locs;
  std::set<std::pair<int, int>> slots;
  std::array<std::array<int, 2>, 4> per_block_count{};
  int cnots = 0, rots = 0;
  for (std::size_t i = 0; i < s.gates.size(); ++i) {
    const GateOp& g = s.gates[i];
    if (g.serial != int(i))
      throw std::invalid_argument("schedule parse: serials are not a permutation of 0..25");
    if (i > 0 && g.column < s.gates[i - 1].column)
      throw std::invalid_argument("schedule parse: columns decrease along the serial order");
    if (!locs.insert(g.location_id).second)
      throw std::invalid_argument("schedule parse: duplicate location '" + g.location_id + "'");
    if (g.kind == GateKind::Cnot) {
      ++cnots;
      if (!slots.insert({g.register_index, g.register_slot}).second)
        throw std::invalid_argument("schedule parse: register qubit targeted twice");
      if (is_rotation_column(g.column))
        throw std::invalid_argument("schedule parse: CNOT in a rotation column");
      ++per_block_count[g.register_index][is_block1_column(g.column) ? 0 : 1];
    } else {
      ++rots;
      if (!is_rotation_column(g.column))
        throw std::invalid_argument("schedule parse: rotation outside its columns");
    }
  }
  if (cnots != 16 || rots != 10)
    throw std::invalid_argument("schedule parse: expected 16 CNOTs and 10 rotations");
  for (int r = 0; r < 4; ++r)
    if (per_block_count[r][0] != 2 || per_block_count[r][1] != 2)
      throw std::invalid_argument("schedule parse: each register needs two CNOTs per block");
  return s;
}

}  // namespace qec5::network
