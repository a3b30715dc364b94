#pragma once

#include <Eigen/Core>
#include <vector>

#include "golomb/random.hpp"
#include "golomb/rulers.hpp"

namespace golomb::ranging {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s, exact

enum class Mode { kPdoa, kToa };

// Measurement model: PDoA over stepped frequencies (phase samples, Tikhonov
// noise with shape kappa = input SNR) or ToA two-way ranging (time samples,
// Gaussian noise).
struct RangingMode {
  Mode mode = Mode::kPdoa;
  double delta_f = 0.0;    // Hz, PDoA frequency step
  double kappa = 0.0;      // Tikhonov shape (PDoA)
  double sigma_tau = 0.0;  // s, timing noise std-dev (ToA)

  static RangingMode pdoa(double delta_f, double kappa);
  static RangingMode toa(double sigma_tau);
};

/// Slope per index: 4*pi*delta_f*d/c (PDoA, rad) or 2d/c (ToA, s).
double omega_from_distance(double distance, const RangingMode& mode);

/// Exact inverse of omega_from_distance; negative slopes are rejected.
double distance_from_omega(double omega, const RangingMode& mode);

// Samples indexed by ruler marks (expanded = false) or by measures
// (expanded = true, values are double differences with doubled noise
// power). PDoA values are always wrapped to (-pi, pi].
struct MeasurementSet {
  std::vector<int> indices;  // ascending
  Eigen::VectorXd values;
  bool expanded = false;
  Mode mode = Mode::kPdoa;
};

// One independent draw per mark, taken at the ruler's absolute marks.
MeasurementSet sample_marks(double distance, const Ruler& ruler,
                            const RangingMode& mode, RandomStream& rng);

// Expands mark samples into one entry per measure via pairwise differences.
// Requires a Golomb ruler so the (k, l) -> measure mapping is unambiguous.
MeasurementSet expand_to_measures(const MeasurementSet& samples, const Ruler& ruler);

}  // namespace golomb::ranging
