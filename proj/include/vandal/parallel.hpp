#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace vandal {

/// Worker count honoring the VANDAL_THREADS environment variable.
std::size_t worker_count();

/// Runs body(i) for i in [0, n). Each index is processed exactly once; callers
/// write results into per-index slots so output never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Deterministic 64-bit generator (splitmix64) with a portable uniform draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

/// Mixes a base seed with a stream index into an independent seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace vandal
