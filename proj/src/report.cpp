#include "qec5/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qec5::report {

using json = nlohmann::ordered_json;

Format format_from_name(const std::string& name) {
  if (name == "human") return Format::Human;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

double round_sig(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v == 0.0 ? 0.0 : v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", round_sig(v));
  return buf;
}

const char* yesno(bool b) { return b ? "true" : "false"; }

json logical_json(const code5::LogicalAmplitudes& l) {
  return json::array({json::array({round_sig(l.alpha.real()), round_sig(l.alpha.imag())}),
                      json::array({round_sig(l.beta.real()), round_sig(l.beta.imag())})});
}

std::string logical_label(const code5::LogicalAmplitudes& l) {
  return fmt(l.alpha.real()) + "|" + fmt(l.alpha.imag()) + "|" + fmt(l.beta.real()) +
         "|" + fmt(l.beta.imag());
}

json syndrome2_json(const std::optional<Syndrome>& s) {
  if (!s) return nullptr;
  return s->str();
}

json sweep_record_json(const verify::SweepRecord& r) {
  return json{{"case_id", r.case_id},
              {"syndrome1", r.syndrome1.str()},
              {"syndrome2", syndrome2_json(r.syndrome2)},
              {"rounds_used", r.rounds_used},
              {"correction", r.correction.label()},
              {"weight", verify::weight_label(r.weight)},
              {"best_correction", r.best_correction.label()},
              {"best_fidelity", round_sig(r.best_fidelity)},
              {"pass", r.pass}};
}

json sweep_report_json(const verify::SweepReport& r) {
  json records = json::array();
  for (const auto& rec : r.records) records.push_back(sweep_record_json(rec));
  return json{{"report", "sweep"},
              {"protocol", protocol::kind_name(r.kind)},
              {"input", verify::sweep_input_name(r.input)},
              {"logical", logical_json(r.logical)},
              {"seed", r.seed},
              {"case_count", r.records.size()},
              {"weight_counts",
               json{{"0", r.weight0_count},
                    {"1", r.weight1_count},
                    {"many", r.weight_many_count}}},
              {"pass_count", r.pass_count},
              {"all_pass", r.all_pass},
              {"records", std::move(records)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const verify::SyndromeTableCheck& c) {
  json rows = json::array();
  for (const auto& r : c.rows)
    rows.push_back(json{{"error", r.error},
                        {"expected", r.expected},
                        {"simulated", r.simulated},
                        {"match", r.match}});
  return dump(json{{"report", "syndrome-table"},
                   {"rows", std::move(rows)},
                   {"all_match", c.all_match}});
}

std::string to_json(const verify::FailureDemo& d) {
  return dump(json{
      {"report", "failure-demo"},
      {"case_id", d.case_id},
      {"naive",
       json{{"syndrome1", d.naive_syndrome.str()},
            {"correction", d.naive_correction.label()},
            {"weight", verify::weight_label(d.naive_verdict.weight)},
            {"best_fidelity", round_sig(d.naive_verdict.best_fidelity)},
            {"two_flip_fidelity", round_sig(d.naive_two_flip_fidelity)}}},
      {"conditional",
       json{{"syndrome1", d.conditional_s1.str()},
            {"syndrome2", syndrome2_json(d.conditional_s2)},
            {"correction", d.conditional_correction.label()},
            {"weight", verify::weight_label(d.conditional_verdict.weight)},
            {"best_fidelity", round_sig(d.conditional_verdict.best_fidelity)}}},
      {"claims_hold", d.claims_hold}});
}

std::string to_json(const verify::SweepReport& r) { return dump(sweep_report_json(r)); }

std::string to_json(const std::vector<verify::SweepReport>& rs) {
  json reports = json::array();
  for (const auto& r : rs) reports.push_back(sweep_report_json(r));
  return dump(json{{"report", "sweep-set"}, {"reports", std::move(reports)}});
}

std::string to_json(const verify::LeakReport& r) {
  json states = json::array();
  for (const auto& s : r.states)
    states.push_back(json{{"state", s.name},
                          {"logical", logical_json(s.logical)},
                          {"cat_syndrome", s.cat_syndrome},
                          {"cat_fidelity", round_sig(s.cat_fidelity)},
                          {"zero_fidelity", round_sig(s.zero_fidelity)}});
  return dump(json{{"report", "ancilla-leak"},
                   {"states", std::move(states)},
                   {"max_distribution_diff", round_sig(r.max_distribution_diff)},
                   {"distributions_match", r.distributions_match},
                   {"cat_preserves_data", r.cat_preserves_data},
                   {"cat_syndromes_zero", r.cat_syndromes_zero},
                   {"zero_ancilla_disturbs", r.zero_ancilla_disturbs},
                   {"all_hold", r.all_hold}});
}

std::string to_json(const verify::SampleReport& r) {
  json records = json::array();
  for (const auto& rec : r.records)
    records.push_back(json{{"case_id", rec.case_id},
                           {"syndrome1", rec.syndrome1.str()},
                           {"syndrome2", syndrome2_json(rec.syndrome2)},
                           {"rounds_used", rec.rounds_used},
                           {"correction", rec.correction.label()},
                           {"weight", verify::weight_label(rec.weight)},
                           {"best_fidelity", round_sig(rec.best_fidelity)},
                           {"span_fidelity", round_sig(rec.span_fidelity)},
                           {"confined", rec.confined},
                           {"strict_pass", rec.strict_pass}});
  return dump(json{{"report", "unitary-sample"},
                   {"trials", r.trials},
                   {"seed", r.seed},
                   {"strict_pass_count", r.strict_pass_count},
                   {"confined_count", r.confined_count},
                   {"worst_best_fidelity", round_sig(r.worst_best_fidelity)},
                   {"all_confined", r.all_confined},
                   {"records", std::move(records)}});
}

std::string to_csv(const verify::SyndromeTableCheck& c) {
  std::ostringstream out;
  out << "error,expected,simulated,match\n";
  for (const auto& r : c.rows)
    out << r.error << ',' << r.expected << ',' << r.simulated << ',' << yesno(r.match)
        << "\n";
  return out.str();
}

std::string to_csv(const verify::FailureDemo& d) {
  std::ostringstream out;
  out << "protocol,syndrome1,syndrome2,correction,weight,best_fidelity,two_flip_fidelity\n";
  out << "naive," << d.naive_syndrome.str() << ",," << d.naive_correction.label() << ','
      << verify::weight_label(d.naive_verdict.weight) << ','
      << fmt(d.naive_verdict.best_fidelity) << ',' << fmt(d.naive_two_flip_fidelity)
      << "\n";
  out << "conditional," << d.conditional_s1.str() << ','
      << (d.conditional_s2 ? d.conditional_s2->str() : std::string()) << ','
      << d.conditional_correction.label() << ','
      << verify::weight_label(d.conditional_verdict.weight) << ','
      << fmt(d.conditional_verdict.best_fidelity) << ",\n";
  return out.str();
}

std::string to_csv(const std::vector<verify::SweepReport>& rs) {
  std::ostringstream out;
  out << "protocol,input,logical,seed,case_id,syndrome1,syndrome2,rounds_used,"
         "correction,weight,best_correction,best_fidelity,pass\n";
  for (const auto& r : rs) {
    const std::string prefix = protocol::kind_name(r.kind) + "," +
                               verify::sweep_input_name(r.input) + "," +
                               logical_label(r.logical) + "," + std::to_string(r.seed);
    for (const auto& rec : r.records)
      out << prefix << ',' << rec.case_id << ',' << rec.syndrome1.str() << ','
          << (rec.syndrome2 ? rec.syndrome2->str() : std::string()) << ','
          << rec.rounds_used << ',' << rec.correction.label() << ','
          << verify::weight_label(rec.weight) << ',' << rec.best_correction.label()
          << ',' << fmt(rec.best_fidelity) << ',' << yesno(rec.pass) << "\n";
  }
  return out.str();
}

std::string to_csv(const verify::LeakReport& r) {
  std::ostringstream out;
  out << "state,cat_syndrome,cat_fidelity,zero_fidelity\n";
  for (const auto& s : r.states)
    out << s.name << ',' << s.cat_syndrome << ',' << fmt(s.cat_fidelity) << ','
        << fmt(s.zero_fidelity) << "\n";
  return out.str();
}

std::string to_csv(const verify::SampleReport& r) {
  std::ostringstream out;
  out << "case_id,syndrome1,syndrome2,rounds_used,correction,weight,best_fidelity,"
         "span_fidelity,confined,strict_pass\n";
  for (const auto& rec : r.records)
    out << rec.case_id << ',' << rec.syndrome1.str() << ','
        << (rec.syndrome2 ? rec.syndrome2->str() : std::string()) << ','
        << rec.rounds_used << ',' << rec.correction.label() << ','
        << verify::weight_label(rec.weight) << ',' << fmt(rec.best_fidelity) << ','
        << fmt(rec.span_fidelity) << ',' << yesno(rec.confined) << ','
        << yesno(rec.strict_pass) << "\n";
  return out.str();
}

std::string to_text(const verify::SyndromeTableCheck& c) {
  std::ostringstream out;
  out << "error  expected  simulated  match\n";
  std::size_t matches = 0;
  for (const auto& r : c.rows) {
    out << r.error << "     " << r.expected << "      " << r.simulated << "       "
        << (r.match ? "yes" : "NO") << "\n";
    if (r.match) ++matches;
  }
  out << matches << "/" << c.rows.size() << " syndromes match\n";
  return out.str();
}

std::string to_text(const verify::FailureDemo& d) {
  std::ostringstream out;
  out << "fault case " << d.case_id << " on the encoded zero state\n\n";
  out << "single-round protocol:\n";
  out << "  syndrome " << d.naive_syndrome.str() << " -> correction "
      << d.naive_correction.label() << "\n";
  out << "  residual error weight: " << verify::weight_label(d.naive_verdict.weight)
      << " (best single-qubit fidelity " << fmt(d.naive_verdict.best_fidelity) << ")\n";
  out << "  fidelity after also flipping qubits 0 and 3 by hand: "
      << fmt(d.naive_two_flip_fidelity) << "\n\n";
  out << "conditional repetition:\n";
  out << "  round 1 syndrome " << d.conditional_s1.str() << ", round 2 syndrome "
      << (d.conditional_s2 ? d.conditional_s2->str() : std::string("-"))
      << " -> correction " << d.conditional_correction.label() << "\n";
  out << "  residual error weight: "
      << verify::weight_label(d.conditional_verdict.weight) << " (fidelity "
      << fmt(d.conditional_verdict.best_fidelity) << ")\n\n";
  out << "claims " << (d.claims_hold ? "hold" : "DO NOT HOLD") << "\n";
  return out.str();
}

std::string to_text(const std::vector<verify::SweepReport>& rs) {
  std::ostringstream out;
  for (const auto& r : rs) {
    out << protocol::kind_name(r.kind) << " protocol, " << verify::sweep_input_name(r.input)
        << " input, logical [" << logical_label(r.logical) << "], seed " << r.seed
        << "\n";
    out << "  cases: " << r.records.size() << "  weight 0: " << r.weight0_count
        << "  weight 1: " << r.weight1_count << "  weight many: " << r.weight_many_count
        << "\n";
    out << "  pass: " << r.pass_count << "/" << r.records.size() << "  ->  "
        << (r.all_pass ? "PASS" : "FAIL") << "\n";
    if (!r.all_pass) {
      std::size_t shown = 0;
      for (const auto& rec : r.records) {
        if (rec.pass) continue;
        if (shown == 20) {
          std::size_t rest = 0;
          for (const auto& rr : r.records)
            if (!rr.pass) ++rest;
          out << "    ... and " << (rest - shown) << " more\n";
          break;
        }
        out << "    " << rec.case_id << ": S1 " << rec.syndrome1.str();
        if (rec.syndrome2) out << ", S2 " << rec.syndrome2->str();
        out << ", applied " << rec.correction.label() << ", weight "
            << verify::weight_label(rec.weight) << ", best fidelity "
            << fmt(rec.best_fidelity) << "\n";
        ++shown;
      }
    }
  }
  return out.str();
}

std::string to_text(const verify::LeakReport& r) {
  std::ostringstream out;
  out << "state  cat syndrome  cat fidelity      all-zeros fidelity\n";
  for (const auto& s : r.states) {
    out << s.name;
    for (std::size_t i = s.name.size(); i < 7; ++i) out << ' ';
    out << s.cat_syndrome << "          " << fmt(s.cat_fidelity) << "   "
        << fmt(s.zero_fidelity) << "\n";
  }
  out << "max ancilla-distribution difference across states: "
      << fmt(r.max_distribution_diff) << "\n";
  out << "distributions identical: " << yesno(r.distributions_match) << "\n";
  out << "parity registers preserve the data: " << yesno(r.cat_preserves_data) << "\n";
  out << "clean-run syndromes are zero: " << yesno(r.cat_syndromes_zero) << "\n";
  out << "all-zeros registers disturb the data: " << yesno(r.zero_ancilla_disturbs)
      << "\n";
  out << (r.all_hold ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string to_text(const verify::SampleReport& r) {
  std::ostringstream out;
  out << "random-unitary faults: " << r.trials << " trials, seed " << r.seed << "\n";
  out << "  strictly corrected (weight <= 1): " << r.strict_pass_count << "/" << r.trials
      << "\n";
  out << "  confined to one qubit (span criterion): " << r.confined_count << "/"
      << r.trials << "\n";
  out << "  worst best-candidate fidelity: " << fmt(r.worst_best_fidelity) << "\n";
  std::size_t shown = 0;
  for (const auto& rec : r.records) {
    if (rec.confined) continue;
    if (shown == 0) out << "  unconfined cases:\n";
    if (shown == 20) {
      out << "    ...\n";
      break;
    }
    out << "    " << rec.case_id << ": span fidelity " << fmt(rec.span_fidelity) << "\n";
    ++shown;
  }
  out << (r.all_confined ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace qec5::report
