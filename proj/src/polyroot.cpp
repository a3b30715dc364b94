#include "golomb/polyroot.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace golomb {
namespace {

using Complex = std::complex<double>;

// Trims negligible leading coefficients (highest powers) so the companion
// matrix and the Aberth iteration see the true degree.
Eigen::VectorXcd trim_leading(const Eigen::VectorXcd& coeffs) {
  double scale = 0.0;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i)
    scale = std::max(scale, std::abs(coeffs[i]));
  if (scale == 0.0) throw std::invalid_argument("roots: zero polynomial");
  Eigen::Index degree = coeffs.size() - 1;
  while (degree > 0 && std::abs(coeffs[degree]) < 1e-14 * scale) --degree;
  return coeffs.head(degree + 1);
}

// One Horner pass evaluating p and p'.
void eval_with_derivative(const Eigen::VectorXcd& c, Complex z, Complex& p,
                          Complex& dp) {
  p = c[c.size() - 1];
  dp = Complex(0.0, 0.0);
  for (Eigen::Index i = c.size() - 2; i >= 0; --i) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

}  // namespace

std::complex<double> polyval(const Eigen::VectorXcd& coeffs, std::complex<double> z) {
  Complex p(0.0, 0.0);
  for (Eigen::Index i = coeffs.size() - 1; i >= 0; --i) p = p * z + coeffs[i];
  return p;
}

std::vector<std::complex<double>> roots_companion(const Eigen::VectorXcd& coeffs) {
  const Eigen::VectorXcd c = trim_leading(coeffs);
  const Eigen::Index n = c.size() - 1;
  if (n == 0) return {};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("roots: companion eigensolve failed");
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
  return out;
}

std::vector<std::complex<double>> roots_aberth(const Eigen::VectorXcd& coeffs) {
  const Eigen::VectorXcd c = trim_leading(coeffs);
  const Eigen::Index n = c.size() - 1;
  if (n == 0) return {};
  if (n == 1) return {-c[0] / c[1]};

  // Initial guesses on a slightly expanded circle with an irrational angular
  // offset; the radius follows the |c0/cn| geometric-mean bound.
  const double ratio = std::abs(c[0]) > 0.0 ? std::abs(c[0] / c[n]) : 1.0;
  const double radius =
      1.05 * std::clamp(std::pow(ratio, 1.0 / static_cast<double>(n)), 0.5, 2.0);
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    const double angle =
        2.0 * std::numbers::pi * (static_cast<double>(k) + 0.353) / static_cast<double>(n);
    z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
  }

  std::vector<char> converged(static_cast<std::size_t>(n), 0);
  constexpr int kMaxSweeps = 120;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool all_done = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (converged[i]) continue;
      Complex p, dp;
      eval_with_derivative(c, z[i], p, dp);
      if (p == Complex(0.0, 0.0)) {
        converged[i] = 1;
        continue;
      }
      Complex sum(0.0, 0.0);
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i) continue;
        const Complex d = z[i] - z[j];
        if (std::abs(d) < 1e-300) {
          sum += 1e12;  // coincident guesses: push apart hard
          continue;
        }
        sum += 1.0 / d;
      }
      const Complex newton = dp == Complex(0.0, 0.0) ? Complex(1e-12, 1e-12) : p / dp;
      const Complex denom = 1.0 - newton * sum;
      const Complex correction =
          std::abs(denom) < 1e-300 ? newton : newton / denom;
      z[i] -= correction;
      if (std::abs(correction) <= 1e-14 * std::max(1.0, std::abs(z[i])))
        converged[i] = 1;
      else
        all_done = false;
    }
    if (all_done) return z;
  }
  return {};  // signal non-convergence; caller falls back
}

std::vector<std::complex<double>> roots(const Eigen::VectorXcd& coeffs) {
  std::vector<Complex> out = roots_aberth(coeffs);
  if (out.empty() && trim_leading(coeffs).size() > 1) out = roots_companion(coeffs);
  return out;
}

}  // namespace golomb
