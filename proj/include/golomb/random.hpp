#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace golomb {

// Kappa at or above this value is treated as the noiseless limit: circular
// draws return the mean exactly instead of sampling.
inline constexpr double kNoiselessKappa = 1e8;

/// Wraps an angle to (-pi, pi].
double wrap_angle(double x);

// Deterministic random stream with explicitly coded draw algorithms, so the
// same seed produces the same values on any standard-conforming build.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  // Stream derived from (seed, index); independent streams for Monte Carlo
  // trials so results do not depend on scheduling.
  static RandomStream substream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();

  /// Uniform on [0, 1).
  double uniform01();

  /// Uniform integer on [lo, hi], inclusive.
  int uniform_int(int lo, int hi);

  double normal(double mean, double stddev);

  // von Mises (Tikhonov) draw via the Best-Fisher rejection method, wrapped
  // to (-pi, pi]. kappa >= kNoiselessKappa returns wrap_angle(mean).
  double von_mises(double mean, double kappa);

  /// Uniform random permutation of {0, ..., n-1} (Fisher-Yates).
  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace golomb
