#pragma once

#include <optional>
#include <span>

#include "vsheet/sheet.hpp"

namespace vsheet {

inline constexpr double kTolInt = 1e-9;

/// Onsager-Feynman condition a * ell in 2 pi Z.
struct PrequantReport {
    double a = 0.0;
    double ell = 0.0;
    double product_over_2pi = 0.0;     // a * ell / 2 pi
    std::optional<int> k;              // nearest integer when within tolerance
    bool prequantizable = false;
};

PrequantReport onsager_feynman(double a, double ell, double tol_int = kTolInt);

/// Evaluates the condition on a sheet: a from enclosed_volume (required > 0),
/// ell from classify.
PrequantReport onsager_feynman(const RevolutionSheet& sheet, double tol_int = kTolInt);

/// Multiplication-by-a homomorphism T_ell -> T_{2 pi}, z -> a z mod 2 pi.
/// Well defined only when a * ell in 2 pi Z; returns a value in [0, 2 pi).
double m_a_map(double z, double a, double ell, double tol_int = kTolInt);

/// Order k = a * ell / 2 pi of the kernel of m_a; verifies that exactly the
/// lattice points j * ell / k (j = 0 .. k-1) map to zero.
int kernel_order(double a, double ell, double tol_int = kTolInt);

/// Derivative of the flux homomorphism on a circle-invariant field v tangent
/// to the sheet: returns -beta(v), which must be constant within tolerance.
double flux_derivative(const RevolutionSheet& sheet, std::span<const double> v_rho,
                       std::span<const double> v_theta, double tol_const = 1e-8);

}  // namespace vsheet
