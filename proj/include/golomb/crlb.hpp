#pragma once

#include <optional>
#include <span>
#include <vector>

#include "golomb/rulers.hpp"

namespace golomb::crlb {

/// Modified Bessel function of the first kind, order 0 or 1. Power series
/// below x = 15, asymptotic expansion beyond; relative error <= 1e-10.
double bessel_i(int order, double x);

/// I1(x)/I0(x), stable for arbitrarily large x (no overflow).
double bessel_i_ratio(double x);

/// sigma = sqrt(1 - I1(kappa)/I0(kappa)).
double sigma_from_kappa(double kappa);

/// Inverse of sigma_from_kappa by bisection; requires sigma in (0, 1).
double kappa_from_sigma(double sigma);

struct FisherResult {
  double fisher = 0.0;  // J, 1/m^2
  double crlb = 0.0;    // 1/J, m^2
};

// PDoA Fisher information, alpha = 4*pi*delta_f/c:
//   expanded:     J = alpha^2 (kappa/2) I1(kappa/2)/I0(kappa/2) * sum nu^2
//   non-expanded: J = alpha^2  kappa    I1(kappa)/I0(kappa)     * sum n^2
// kappa is the per-mark shape; expansion doubles the noise internally.
FisherResult fisher_pdoa(std::span<const int> design, double delta_f, double kappa,
                         bool expanded);

// ToA Fisher information:
//   expanded:     J = 2/(c^2 sigma^2) * sum nu^2   (doubled variance)
//   non-expanded: J = 4/(c^2 sigma^2) * sum n^2
FisherResult fisher_toa(std::span<const int> design, double sigma_tau, bool expanded);

struct RatioPoint {
  double sigma = 0.0;
  double fisher_marks = 0.0;     // J(N)
  double fisher_measures = 0.0;  // J(V)
  double ratio = 0.0;            // J(N)/J(V)
};

struct RatioCurve {
  std::vector<RatioPoint> points;
  std::optional<double> crossing;  // sigma* where the ratio equals 1
};

// J(N)/J(V) over a sigma grid for a Golomb ruler, using the ruler's true
// distinct-measure set. The crossing, when bracketed by the grid, is
// resolved by bisection.
RatioCurve ratio_curve(const Ruler& ruler, double delta_f,
                       std::span<const double> sigma_grid);

/// 200 log-spaced points over [1e-2, 0.9].
std::vector<double> default_sigma_grid();

}  // namespace golomb::crlb
