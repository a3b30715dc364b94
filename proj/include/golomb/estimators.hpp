#pragma once

#include <Eigen/Core>
#include <complex>
#include <span>
#include <vector>

#include "golomb/ranging.hpp"

namespace golomb::est {

inline constexpr double kDefaultGridStep = 2e-5;   // rad
inline constexpr double kDefaultRootAnnulus = 0.2; // | |z| - 1 | tolerance

/// Unit-modulus vector e^{j * nu_m * omega} over the given index set.
Eigen::VectorXcd steering(double omega, std::span<const int> measures);

// Sample covariance and its eigenstructure. Eigenvalues are ordered
// descending; the noise basis is the trailing M-1 eigenvectors.
struct SubspaceModel {
  Eigen::MatrixXcd covariance;    // M x M Hermitian
  Eigen::MatrixXcd noise_basis;   // M x (M-1), orthonormal columns
  Eigen::VectorXcd signal_vector; // dominant eigenvector
  Eigen::VectorXd eigenvalues;    // descending
  int snapshots = 0;              // L
};

/// R = (1/L) sum x_i x_i^H over the columns of `snapshots`; M >= 2 required.
SubspaceModel build_subspace(const Eigen::MatrixXcd& snapshots);

// Phase-domain snapshot x_m = e^{j * scale * value_m}. PDoA values use
// scale = 1; ToA values are mapped into phase via toa_phase_scale so the
// slope stays below pi over the design.
Eigen::VectorXcd to_snapshot(const ranging::MeasurementSet& samples,
                             double phase_scale = 1.0);

/// Scale mapping time samples into (0, pi) phases for slopes up to the one
/// implied by max_distance.
double toa_phase_scale(double max_distance, int max_index);

enum class EstimateStatus { kOk, kNoPeak, kNoUnitRoot, kDegenerate };

const char* to_string(EstimateStatus status);

struct MusicEstimate {
  double distance = 0.0;
  double omega = 0.0;  // phase-domain estimate
  EstimateStatus status = EstimateStatus::kOk;
  Eigen::ArrayXd grid;      // sampled omegas
  Eigen::ArrayXd spectrum;  // 1 / ||e^H U0||^2
};

// Spectral search for the largest pseudo-spectrum value over (0, pi),
// refined by a golden-section pass around the best grid point. A flat
// spectrum (max/median < 1 + 1e-6) is flagged kNoPeak; a boundary peak is
// flagged kDegenerate.
MusicEstimate music_estimate(const SubspaceModel& model, std::span<const int> measures,
                             const ranging::RangingMode& mode,
                             double grid_step = kDefaultGridStep,
                             double phase_scale = 1.0);

// P(z) with coefficient nu equal to the nu-th anti-diagonal trace (counted
// from the bottom-left corner) of the Gramian G, the zero-padded embedding
// of U0 U0^H at index pairs (nu_m, nu_l). Zero extreme coefficients are
// trimmed; low-order trims divide out roots at z = 0.
struct MusicPolynomial {
  Eigen::VectorXcd coefficients;  // ascending, trimmed
  Eigen::MatrixXcd gramian;
  int low_exponent = 0;  // exponent of coefficients[0] before trimming

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

MusicPolynomial music_polynomial(const SubspaceModel& model,
                                 std::span<const int> measures);

struct RootMusicEstimate {
  double distance = 0.0;
  double omega = 0.0;
  EstimateStatus status = EstimateStatus::kOk;
  std::vector<std::complex<double>> roots;
  std::complex<double> selected{0.0, 0.0};
};

// Roots the Gramian-trace polynomial and selects the in-disk root closest
// to the unit circle with argument in (0, pi); candidates outside
// | |z| - 1 | <= annulus fail with kNoUnitRoot. The selected argument is
// polished by a guarded Newton step on the unit circle.
RootMusicEstimate root_music_estimate(const SubspaceModel& model,
                                      std::span<const int> measures,
                                      const ranging::RangingMode& mode,
                                      double phase_scale = 1.0,
                                      double annulus = kDefaultRootAnnulus);

struct AverageEstimate {
  double distance = 0.0;
  bool wrap_suspect = false;  // negative phase ratios seen (possible wrap)
  int used = 0;               // entries contributing (zero indices skipped)
};

/// Baseline: mean over entries of distance_from_omega(value / index).
AverageEstimate average_estimate(const ranging::MeasurementSet& samples,
                                 const ranging::RangingMode& mode);

}  // namespace golomb::est
