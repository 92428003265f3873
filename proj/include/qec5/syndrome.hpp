#pragma once

#include <array>
#include <string>

namespace qec5 {

// Four parity bits (a0, a1, a2, a3), one per syndrome register, printed in
// that order: "0101" means a0=0, a1=1, a2=0, a3=1.
struct Syndrome {
  std::array<int, 4> bits{0, 0, 0, 0};

  bool is_zero() const { return bits[0] == 0 && bits[1] == 0 && bits[2] == 0 && bits[3] == 0; }

  // a0 is the most significant bit: "0101" -> 5.
  int value() const {
    return (bits[0] << 3) | (bits[1] << 2) | (bits[2] << 1) | bits[3];
  }

  std::string str() const;

  // Accepts exactly four characters of '0'/'1'; throws std::invalid_argument.
  static Syndrome from_string(const std::string& s);

  friend bool operator==(const Syndrome& a, const Syndrome& b) { return a.bits == b.bits; }
  friend bool operator!=(const Syndrome& a, const Syndrome& b) { return !(a == b); }
};

}  // namespace qec5
