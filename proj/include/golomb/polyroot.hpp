#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

namespace golomb {

// Polynomial roots, coefficients ascending by power. The Aberth-Ehrlich
// iteration is the fast path (roots of the pseudo-spectrum polynomials
// cluster near the unit circle, where it converges in a few dozen sweeps);
// the companion-matrix eigensolve is the reference and the fallback.
std::vector<std::complex<double>> roots_aberth(const Eigen::VectorXcd& coeffs);
std::vector<std::complex<double>> roots_companion(const Eigen::VectorXcd& coeffs);

/// Aberth with companion fallback on non-convergence.
std::vector<std::complex<double>> roots(const Eigen::VectorXcd& coeffs);

std::complex<double> polyval(const Eigen::VectorXcd& coeffs, std::complex<double> z);

}  // namespace golomb
