// qec5: command-line front end for the syndrome-extraction simulator.
//
// Every subcommand prints a report (human, json or csv) and uses its exit
// code as the verdict: 0 when the checked property holds, 1 when it does
// not, 2 on usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qec5/faults.hpp"
#include "qec5/network.hpp"
#include "qec5/protocol.hpp"
#include "qec5/report.hpp"
#include "qec5/verify.hpp"

namespace qec5::cli {

namespace {

int default_threads() {
  const char* env = std::getenv("QEC5_THREADS");
  if (!env) return 1;
  const int n = std::atoi(env);
  return n > 0 ? n : 1;
}

struct RunConfig {
  std::string schedule_file;  // when set, wiring comes from this file
  std::string column_order = "desc";
  bool corrupt_wiring = false;
  std::uint64_t seed = 17;
  int threads = default_threads();
  std::string format = "human";
  std::string output;  // empty: stdout
};

void add_schedule_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--schedule", cfg.schedule_file,
                  "load the gate schedule from a file (overrides the wiring flags)");
  cmd->add_option("--column-order", cfg.column_order,
                  "gate order inside a time step: desc or asc data-qubit index")
      ->check(CLI::IsMember({"desc", "asc"}));
  cmd->add_flag("--corrupt-wiring", cfg.corrupt_wiring,
                "swap two block-1 couplings between registers (negative control; checks must fail)");
}

void add_report_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "report format: human, json or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  cmd->add_option("--output", cfg.output, "write the report to this file instead of stdout");
}

network::Schedule make_schedule(const RunConfig& cfg) {
  if (!cfg.schedule_file.empty()) {
    std::ifstream in(cfg.schedule_file);
    if (!in) throw std::runtime_error("cannot open schedule file '" + cfg.schedule_file + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return network::parse_schedule(text.str());
  }
  network::ScheduleOptions opts;
  opts.column_order = cfg.column_order == "asc" ? network::ColumnOrder::AscendingDataQubit
                                                : network::ColumnOrder::DescendingDataQubit;
  opts.corrupt_wiring = cfg.corrupt_wiring;
  return network::build_schedule(opts);
}

void emit(const RunConfig& cfg, const std::string& human, const std::string& json,
          const std::string& csv) {
  const report::Format f = report::format_from_name(cfg.format);
  const std::string& text = f == report::Format::Json ? json
                            : f == report::Format::Csv ? csv
                                                       : human;
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write to '" + cfg.output + "'");
  out << text;
}

code5::LogicalAmplitudes parse_logical(const std::string& s) {
  std::vector<double> vals;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(tok, &pos);
    } catch (...) {
      pos = std::string::npos;
    }
    if (pos != tok.size())
      throw std::runtime_error("bad logical amplitude '" + tok + "' in '" + s + "'");
    vals.push_back(v);
  }
  if (vals.size() == 2) return {vals[0], vals[1]};
  if (vals.size() == 4) return {{vals[0], vals[1]}, {vals[2], vals[3]}};
  throw std::runtime_error("--logical wants 'a,b' (real) or 'are,aim,bre,bim', got '" + s +
                           "'");
}

int run_syndromes(const RunConfig& cfg) {
  const auto schedule = make_schedule(cfg);
  const auto check = verify::reproduce_syndrome_table(schedule, cfg.seed);
  emit(cfg, report::to_text(check), report::to_json(check), report::to_csv(check));
  return check.all_match ? 0 : 1;
}

int run_demo(const RunConfig& cfg) {
  const auto schedule = make_schedule(cfg);
  const auto demo = verify::failure_demo(schedule, cfg.seed);
  emit(cfg, report::to_text(demo), report::to_json(demo), report::to_csv(demo));
  return demo.claims_hold ? 0 : 1;
}

struct SweepCli {
  std::string protocol = "conditional";
  std::string input = "clean";
  std::vector<std::string> logicals;
  std::vector<std::string> cases;
  double fidelity_tol = 1e-9;
};

int run_sweep(const RunConfig& cfg, const SweepCli& sc) {
  const auto schedule = make_schedule(cfg);
  std::vector<std::string> logicals = sc.logicals;
  if (logicals.empty()) logicals.push_back("1,0");

  std::vector<verify::SweepReport> reports;
  for (const std::string& l : logicals) {
    verify::SweepOptions opts;
    opts.kind = protocol::kind_from_name(sc.protocol);
    opts.input = sc.input == "clean" ? verify::SweepInput::Clean
                                     : verify::SweepInput::SingleErrors;
    opts.logical = parse_logical(l);
    opts.seed = cfg.seed;
    opts.threads = cfg.threads;
    opts.fidelity_tol = sc.fidelity_tol;
    opts.case_filter = sc.cases;
    reports.push_back(verify::sweep(schedule, opts));
  }
  emit(cfg, report::to_text(reports), report::to_json(reports), report::to_csv(reports));
  for (const auto& r : reports)
    if (!r.all_pass) return 1;
  return 0;
}

int run_sample(const RunConfig& cfg, int trials, double tol) {
  const auto schedule = make_schedule(cfg);
  const auto rep =
      verify::monte_carlo_unitary_sweep(schedule, trials, cfg.seed, cfg.threads, tol);
  emit(cfg, report::to_text(rep), report::to_json(rep), report::to_csv(rep));
  return rep.all_confined ? 0 : 1;
}

int run_leak(const RunConfig& cfg) {
  const auto schedule = make_schedule(cfg);
  const auto rep = verify::ancilla_leak_test(schedule, cfg.seed);
  emit(cfg, report::to_text(rep), report::to_json(rep), report::to_csv(rep));
  return rep.all_hold ? 0 : 1;
}

int run_schedule(const RunConfig& cfg, const std::string& check_file) {
  if (!check_file.empty()) {
    std::ifstream in(check_file);
    if (!in) throw std::runtime_error("cannot open schedule file '" + check_file + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try {
      const auto schedule = network::parse_schedule(text.str());
      std::cout << "schedule OK: " << schedule.gates.size() << " gates\n";
      return 0;
    } catch (const std::invalid_argument& e) {
      std::cerr << "schedule INVALID: " << e.what() << "\n";
      return 1;
    }
  }
  const auto schedule = make_schedule(cfg);
  const std::string text = network::export_schedule(schedule);
  emit(cfg, text, text, text);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"five-qubit-code syndrome extraction: simulator and fault-injection checks"};
  app.require_subcommand(1);

  RunConfig cfg;
  int rc = 0;

  auto* syndromes = app.add_subcommand(
      "syndromes", "simulate all 15 single-qubit input errors and check the decode table");
  add_schedule_options(syndromes, cfg);
  add_report_options(syndromes, cfg);
  syndromes->add_option("--seed", cfg.seed, "measurement RNG seed");
  syndromes->callback([&] { rc = run_syndromes(cfg); });

  auto* demo = app.add_subcommand(
      "demo", "worked example: one two-qubit fault defeats single-round correction");
  add_schedule_options(demo, cfg);
  add_report_options(demo, cfg);
  demo->add_option("--seed", cfg.seed, "measurement RNG seed");
  demo->callback([&] { rc = run_demo(cfg); });

  SweepCli sc;
  auto* sweep = app.add_subcommand(
      "sweep", "run the protocol against every single-Pauli fault case");
  add_schedule_options(sweep, cfg);
  add_report_options(sweep, cfg);
  sweep->add_option("--seed", cfg.seed, "measurement RNG seed");
  sweep->add_option("--threads", cfg.threads,
                    "worker threads (default: QEC5_THREADS or 1)");
  sweep->add_option("--protocol", sc.protocol, "naive or conditional")
      ->check(CLI::IsMember({"naive", "conditional"}));
  sweep->add_option("--input", sc.input,
                    "clean (every fault case) or single-errors (corrupted inputs only)")
      ->check(CLI::IsMember({"clean", "single-errors"}));
  sweep->add_option("--logical", sc.logicals,
                    "encoded state 'a,b' or 'are,aim,bre,bim'; repeatable, default 1,0");
  sweep->add_option("--case", sc.cases, "restrict to these case ids; repeatable");
  sweep->add_option("--fidelity-tol", sc.fidelity_tol,
                    "fidelity tolerance for weight classification");
  sweep->callback([&] { rc = run_sweep(cfg, sc); });

  int trials = 200;
  double sample_tol = 1e-9;
  auto* sample = app.add_subcommand(
      "sample", "random two-qubit unitary faults under the conditional protocol");
  add_schedule_options(sample, cfg);
  add_report_options(sample, cfg);
  sample->add_option("--seed", cfg.seed, "sampling and measurement RNG seed");
  sample->add_option("--threads", cfg.threads,
                     "worker threads (default: QEC5_THREADS or 1)");
  sample->add_option("--trials", trials, "number of sampled faults")
      ->check(CLI::PositiveNumber);
  sample->add_option("--fidelity-tol", sample_tol, "confinement tolerance");
  sample->callback([&] { rc = run_sample(cfg, trials, sample_tol); });

  auto* leak = app.add_subcommand(
      "leak", "contrast parity-state ancillas with all-zeros ancillas");
  add_schedule_options(leak, cfg);
  add_report_options(leak, cfg);
  leak->add_option("--seed", cfg.seed, "measurement RNG seed");
  leak->callback([&] { rc = run_leak(cfg); });

  std::string check_file;
  auto* schedule = app.add_subcommand(
      "schedule", "print the gate schedule, or validate one with --check");
  add_schedule_options(schedule, cfg);
  add_report_options(schedule, cfg);
  schedule->add_option("--check", check_file, "parse and validate this schedule file");
  schedule->callback([&] { rc = run_schedule(cfg, check_file); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace
}  // namespace qec5::cli

int main(int argc, char** argv) { return qec5::cli::run(argc, argv); }
