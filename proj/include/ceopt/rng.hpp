#pragma once

#include <cstdint>
#include <random>

namespace ceopt {

/// Deterministic random source. A thin wrapper over std::mt19937_64, whose
/// raw output stream is fixed by the standard, so a seed reproduces the same
/// draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

/// Independent stream seed derived from (master, stream index) with the
/// splitmix64 avalanche:
///   z = master + (stream + 1) * 0x9E3779B97F4A7C15
/// followed by two xor-shift-multiply rounds. Trial and per-method seeds are
/// all derived this way, so any run is reconstructible from the master seed.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace ceopt
