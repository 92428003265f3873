#include <doctest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qec5/report.hpp"

using namespace qec5;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(bool(in), ("missing golden file: " + path).c_str());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string golden(const char* name) {
  return read_file(std::string(QEC5_GOLDEN_DIR) + "/" + name);
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("format names") {
  CHECK(report::format_from_name("human") == report::Format::Human);
  CHECK(report::format_from_name("json") == report::Format::Json);
  CHECK(report::format_from_name("csv") == report::Format::Csv);
  CHECK_THROWS_AS(report::format_from_name("xml"), std::invalid_argument);
}

TEST_CASE("rounding to twelve significant digits is idempotent") {
  const double third = report::round_sig(1.0 / 3.0);
  CHECK(third == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
  CHECK(report::round_sig(third) == third);
  CHECK(report::round_sig(0.0) == 0.0);
  CHECK(report::round_sig(-0.0) == 0.0);
  CHECK(report::round_sig(1.0) == 1.0);
  CHECK(report::round_sig(1e-300) == doctest::Approx(1e-300));
}

TEST_CASE("json reports re-serialize to the same bytes") {
  const network::Schedule s = network::build_schedule();
  const auto table = verify::reproduce_syndrome_table(s, 17);
  const auto demo = verify::failure_demo(s, 17);

  for (const std::string& text : {report::to_json(table), report::to_json(demo)}) {
    const auto parsed = nlohmann::ordered_json::parse(text);
    CHECK(parsed.dump(2) + "\n" == text);
  }
}

TEST_CASE("csv and human forms have one row per record") {
  const network::Schedule s = network::build_schedule();
  const auto table = verify::reproduce_syndrome_table(s, 17);
  CHECK(count_lines(report::to_csv(table)) == 16);  // header + 15 rows
  CHECK(count_lines(report::to_text(table)) == 17);

  verify::SweepOptions opts;
  opts.input = verify::SweepInput::SingleErrors;
  const std::vector<verify::SweepReport> reps = {verify::sweep(s, opts)};
  CHECK(count_lines(report::to_csv(reps)) == 16);
  const std::string text = report::to_text(reps);
  CHECK(text.find("pass: 15/15") != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);
}

TEST_CASE("sweep json carries verdict counts") {
  const network::Schedule s = network::build_schedule();
  verify::SweepOptions opts;
  opts.case_filter = {"input.d0:X", "blk1.cnot.d0.a3:before:XX"};
  const auto rep = verify::sweep(s, opts);
  const auto j = nlohmann::ordered_json::parse(report::to_json(rep));
  CHECK(j.at("report") == "sweep");
  CHECK(j.at("case_count") == 2);
  CHECK(j.at("records").size() == 2);
  CHECK(j.at("weight_counts").at("many") == 0);
  CHECK(j.at("all_pass") == true);
}

// The golden files pin the exact serialized output (12 significant digits,
// two-space JSON indent, stable key order) for the default seed. Regenerate
// with the commands in tests/golden/v1/README if the format changes on
// purpose.
TEST_CASE("golden: schedule export") {
  CHECK(network::export_schedule(network::build_schedule()) == golden("schedule.txt"));
}

TEST_CASE("golden: syndrome table json") {
  const auto check = verify::reproduce_syndrome_table(network::build_schedule(), 17);
  CHECK(report::to_json(check) == golden("syndrome_table.json"));
}

TEST_CASE("golden: failure demo json") {
  const auto demo = verify::failure_demo(network::build_schedule(), 17);
  CHECK(report::to_json(demo) == golden("demo.json"));
}

TEST_CASE("golden: leak report json") {
  const auto leak = verify::ancilla_leak_test(network::build_schedule(), 17);
  CHECK(report::to_json(leak) == golden("leak.json"));
}
