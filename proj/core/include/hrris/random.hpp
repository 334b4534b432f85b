#pragma once

#include <cstdint>
#include <random>

#include "hrris/complex_matrix.hpp"

namespace hrris {

/// Seedable random stream used by the channel model and optimizer init.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard, and all value mappings (uniform, angle, complex Gaussian) are
/// spelled out here rather than delegated to std::*_distribution, so a seed
/// pins the entire draw sequence for a given build.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0, 1]; safe to pass through log().
  double uniform_positive() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform on [0, 2*pi).
  double uniform_angle();

  /// Circularly-symmetric complex Gaussian with E|z|^2 = 1, via the polar
  /// transform z = sqrt(-ln u) * exp(j*2*pi*v). Consumes two draws.
  Complex complex_gaussian();

 private:
  std::mt19937_64 engine_;
};

/// Stream seed for one Monte Carlo trial: base_seed XOR trial_index, so
/// trials are order-independent and safe to run concurrently.
inline std::uint64_t trial_stream_seed(std::uint64_t base_seed, std::uint64_t trial_index) {
  return base_seed ^ trial_index;
}

}  // namespace hrris
