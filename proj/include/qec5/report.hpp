#pragma once

#include <string>
#include <vector>

#include "qec5/verify.hpp"

namespace qec5::report {

enum class Format { Human, Json, Csv };

Format format_from_name(const std::string& name);  // "human"/"json"/"csv"

// Rounds to 12 significant digits; every floating-point value is passed
// through this before serialization so that emitted reports are stable
// byte-for-byte.
double round_sig(double v);

// JSON forms are nlohmann::ordered_json dumped with two-space indent plus a
// trailing newline, so parse + re-dump reproduces the bytes exactly.
std::string to_json(const verify::SyndromeTableCheck& c);
std::string to_json(const verify::FailureDemo& d);
std::string to_json(const verify::SweepReport& r);
std::string to_json(const std::vector<verify::SweepReport>& rs);
std::string to_json(const verify::LeakReport& r);
std::string to_json(const verify::SampleReport& r);

std::string to_csv(const verify::SyndromeTableCheck& c);
std::string to_csv(const verify::FailureDemo& d);
std::string to_csv(const std::vector<verify::SweepReport>& rs);
std::string to_csv(const verify::LeakReport& r);
std::string to_csv(const verify::SampleReport& r);

std::string to_text(const verify::SyndromeTableCheck& c);
std::string to_text(const verify::FailureDemo& d);
std::string to_text(const std::vector<verify::SweepReport>& rs);
std::string to_text(const verify::LeakReport& r);
std::string to_text(const verify::SampleReport& r);

}  // namespace qec5::report
