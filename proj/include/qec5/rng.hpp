#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qec5 {

// Deterministic random source. All sampling goes through this wrapper so
// that results depend only on the seed and never on platform library
// details: uniform() converts raw engine output manually and gaussian() is
// a plain Box-Muller transform (std::uniform_real_distribution and
// std::normal_distribution are not specified bit-for-bit across stdlibs).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Standard normal deviate.
  double gaussian();

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// FNV-1a hash, used to derive per-case seeds from case ids.
std::uint64_t fnv1a64(std::string_view s);

// SplitMix64 finalizer, used to decorrelate seeds built from hashes.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace qec5
