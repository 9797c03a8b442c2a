#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "viaccel/vector.hpp"

namespace viaccel {

// Seeded generator with a fixed bits-to-double mapping and Box-Muller normals,
// so streams are identical across standard libraries (std::uniform_real_distribution
// and std::normal_distribution are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

  Vector uniform_vector(std::size_t n, double lo, double hi);
  Vector normal_vector(std::size_t n, double scale = 1.0);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

}  // namespace viaccel
