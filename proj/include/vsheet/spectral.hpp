#pragma once

#include <span>
#include <vector>

namespace vsheet {

/// d/drho of (winding / 2 pi) rho + periodic(rho) via Fourier differentiation.
/// Exact for trigonometric polynomials below the Nyquist limit; the Nyquist
/// mode is zeroed so derivatives of real data stay real.
std::vector<double> spectral_derivative(std::span<const double> periodic, double winding = 0.0);

/// Second derivative of the periodic part (winding contributes nothing).
std::vector<double> spectral_second_derivative(std::span<const double> periodic);

/// Zero-mean periodic primitive of (f - mean(f)).
std::vector<double> spectral_antiderivative(std::span<const double> f);

/// Zeroes the top third of the spectrum (2/3-rule dealiasing filter).
std::vector<double> dealias_two_thirds(std::span<const double> f);

/// Periodic trapezoid quadrature (2 pi / n) * sum(f); spectrally accurate for
/// smooth periodic integrands. Deterministic fixed-order reduction.
double periodic_quadrature(std::span<const double> f);

}  // namespace vsheet
