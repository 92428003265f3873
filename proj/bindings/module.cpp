// Python face of the simulator: a thin layer over the C++ core exposing the
// operations needed for interactive exploration and smoke testing. Heavy
// sweeps stay in C++; Python sees summaries and per-case results.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qec5/faults.hpp"
#include "qec5/network.hpp"
#include "qec5/protocol.hpp"
#include "qec5/verify.hpp"

namespace py = pybind11;
using namespace qec5;

namespace {

PauliKind kind_from_str(const std::string& s) {
  if (s.size() != 1) throw std::invalid_argument("Pauli must be one of I, X, Y, Z");
  return pauli_from_char(s[0]);
}

network::Schedule make_schedule(const std::string& column_order, bool corrupt_wiring) {
  network::ScheduleOptions opts;
  if (column_order == "asc")
    opts.column_order = network::ColumnOrder::AscendingDataQubit;
  else if (column_order != "desc")
    throw std::invalid_argument("column_order must be 'desc' or 'asc'");
  opts.corrupt_wiring = corrupt_wiring;
  return network::build_schedule(opts);
}

py::object opt_syndrome(const std::optional<Syndrome>& s) {
  if (!s) return py::none();
  return py::str(s->str());
}

py::dict case_result(const protocol::ProtocolResult& res, const verify::WeightVerdict& v) {
  py::dict d;
  d["syndrome1"] = res.syndrome1.str();
  d["syndrome2"] = opt_syndrome(res.syndrome2);
  d["rounds_used"] = res.rounds_used;
  d["correction"] = res.correction.label();
  d["weight"] = verify::weight_label(v.weight);
  d["best_correction"] = v.best_correction.label();
  d["best_fidelity"] = v.best_fidelity;
  d["pass"] = v.weight != verify::ErrorWeight::Many;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qec5, m) {
  m.doc() = "five-qubit-code syndrome extraction: state-vector core";

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform", &Rng::uniform)
      .def("gaussian", &Rng::gaussian);

  py::class_<StateVector>(m, "StateVector")
      .def(py::init<std::size_t>(), py::arg("qubit_count"))
      .def_static(
          "basis",
          [](std::size_t n, const std::string& bits) {
            return StateVector::basis_state(n, bits);
          },
          py::arg("qubit_count"), py::arg("bits"))
      .def_property_readonly("qubit_count", &StateVector::qubit_count)
      .def_property_readonly("dim", &StateVector::dim)
      .def("amplitudes", [](const StateVector& s) { return s.amps(); })
      .def("norm", &StateVector::norm)
      .def("apply_r", &StateVector::apply_r, py::arg("qubit"))
      .def(
          "apply_pauli",
          [](StateVector& s, std::size_t q, const std::string& k) {
            s.apply_pauli(q, kind_from_str(k));
          },
          py::arg("qubit"), py::arg("kind"))
      .def("apply_cnot", &StateVector::apply_cnot, py::arg("control"), py::arg("target"))
      .def(
          "measure",
          [](StateVector& s, std::size_t q, Rng& rng) {
            const MeasurementRecord r = s.measure_qubit(q, rng);
            return py::make_tuple(r.outcome, r.probability);
          },
          py::arg("qubit"), py::arg("rng"))
      .def("outcome_distribution", &StateVector::outcome_distribution, py::arg("qubits"));

  py::class_<network::Schedule>(m, "Schedule")
      .def_property_readonly("gate_count",
                             [](const network::Schedule& s) { return s.gates.size(); })
      .def("gate_locations",
           [](const network::Schedule& s) {
             std::vector<std::string> out;
             for (const auto& g : s.gates) out.push_back(g.location_id);
             return out;
           })
      .def("fault_locations",
           [](const network::Schedule& s) {
             py::list out;
             for (const auto& l : network::enumerate_fault_locations(s))
               out.append(py::make_tuple(
                   l.location_id,
                   l.placement == network::Placement::Before ? "before" : "after", l.arity));
             return out;
           })
      .def("export_text", &network::export_schedule);

  m.def("build_schedule", &make_schedule, py::arg("column_order") = "desc",
        py::arg("corrupt_wiring") = false);
  m.def("parse_schedule", &network::parse_schedule, py::arg("text"));

  m.def(
      "encode", [](cxd alpha, cxd beta) { return code5::encode({alpha, beta}); },
      py::arg("alpha"), py::arg("beta"));
  m.def("logical_zero", &code5::logical_zero);
  m.def("logical_one", &code5::logical_one);
  m.def("fidelity", &fidelity, py::arg("a"), py::arg("b"));

  m.def("syndrome_table", [] {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& row : protocol::syndrome_table())
      rows.push_back({std::string(1, pauli_char(row.kind)) + std::to_string(row.qubit),
                      row.syndrome.str()});
    return rows;
  });

  m.def(
      "check_syndrome_table",
      [](const network::Schedule& s, std::uint64_t seed) {
        const auto check = verify::reproduce_syndrome_table(s, seed);
        py::list rows;
        for (const auto& r : check.rows) {
          py::dict row;
          row["error"] = r.error;
          row["expected"] = r.expected;
          row["simulated"] = r.simulated;
          row["match"] = r.match;
          rows.append(row);
        }
        py::dict d;
        d["all_match"] = check.all_match;
        d["rows"] = rows;
        return d;
      },
      py::arg("schedule"), py::arg("seed") = 17);

  m.def(
      "all_case_ids",
      [](const network::Schedule& s) {
        std::vector<std::string> ids;
        for (const auto& c : faults::all_pauli_fault_cases(s)) ids.push_back(c.case_id);
        return ids;
      },
      py::arg("schedule"));

  m.def(
      "run_case",
      [](const network::Schedule& s, const std::string& case_id,
         const std::string& protocol_name, cxd alpha, cxd beta, std::uint64_t seed) {
        const StateVector ideal = code5::encode({alpha, beta});
        const faults::FaultCase c = faults::parse_case_id(s, case_id);
        // Same per-case seed derivation as the sweep, so results line up
        // with sweep records for the same seed.
        Rng rng(splitmix64(seed ^ fnv1a64(c.case_id)));
        StateVector data = ideal;
        std::optional<network::ResolvedFault> rf;
        if (c.input_error)
          data.apply_pauli(std::size_t(c.input_error->qubit), c.input_error->kind);
        else
          rf = faults::resolve_fault(s, c);
        const auto res =
            protocol::run_protocol(protocol::kind_from_name(protocol_name), data, s, rf, rng);
        return case_result(res, verify::min_error_weight(res.output, ideal));
      },
      py::arg("schedule"), py::arg("case_id"), py::arg("protocol") = "conditional",
      py::arg("alpha") = cxd(1.0, 0.0), py::arg("beta") = cxd(0.0, 0.0),
      py::arg("seed") = 17);

  m.def(
      "sweep_summary",
      [](const network::Schedule& s, const std::string& protocol_name,
         const std::string& input, cxd alpha, cxd beta, std::uint64_t seed, int threads) {
        verify::SweepOptions opts;
        opts.kind = protocol::kind_from_name(protocol_name);
        if (input == "single-errors")
          opts.input = verify::SweepInput::SingleErrors;
        else if (input != "clean")
          throw std::invalid_argument("input must be 'clean' or 'single-errors'");
        opts.logical = {alpha, beta};
        opts.seed = seed;
        opts.threads = threads;
        const auto rep = verify::sweep(s, opts);
        py::dict d;
        d["cases"] = rep.records.size();
        d["weight0"] = rep.weight0_count;
        d["weight1"] = rep.weight1_count;
        d["weight_many"] = rep.weight_many_count;
        d["pass_count"] = rep.pass_count;
        d["all_pass"] = rep.all_pass;
        return d;
      },
      py::arg("schedule"), py::arg("protocol") = "conditional", py::arg("input") = "clean",
      py::arg("alpha") = cxd(1.0, 0.0), py::arg("beta") = cxd(0.0, 0.0),
      py::arg("seed") = 17, py::arg("threads") = 1);
}
