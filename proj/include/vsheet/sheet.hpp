#pragma once

#include <string>
#include <vector>

#include "vsheet/errors.hpp"

namespace vsheet {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Default lower bound on the discrete parametrization speed sqrt(xi_rho^2 + eta_rho^2).
inline constexpr double kEpsSpeed = 1e-6;
/// Lower bound on the distance to the rotation axis during RHS evaluation.
inline constexpr double kEpsAxis = 1e-6;

/// Uniform periodic grid for the profile parameter rho in [0, 2*pi).
class Grid {
  public:
    explicit Grid(int n_samples) : n_(n_samples) {
        if (n_samples < 16 || n_samples % 2 != 0)
            throw ContractError("grid size must be even and >= 16, got " + std::to_string(n_samples));
    }
    int n() const { return n_; }
    double spacing() const { return kTwoPi / n_; }
    double rho(int i) const { return kTwoPi * i / n_; }
    bool operator==(const Grid& other) const { return n_ == other.n_; }

  private:
    int n_;
};

/// Closed plane curve (xi, eta), xi > 0, sampled on a uniform grid; generates
/// the surface of revolution (xi cos theta, xi sin theta, eta).
struct ProfileCurve {
    Grid grid;
    std::vector<double> xi;
    std::vector<double> eta;
};

/// Invariant closed 1-form beta = zeta_rho d rho + c d theta, with
/// zeta(rho) = (winding / 2 pi) rho + zeta_periodic(rho).
struct VorticityProfile {
    Grid grid;
    std::vector<double> zeta_periodic;
    double rho_winding = 0.0;    // P, so zeta(rho + 2 pi) = zeta(rho) + P
    double theta_constant = 0.0; // c

    /// Samples of zeta_rho (spectral derivative of the periodic part plus P / 2 pi).
    std::vector<double> zeta_rho() const;
};

enum class Fibration { ParallelCircles, Meridians, Custom };
enum class NormalOrientation { Inward, Outward };

/// Orientation convention attached to a fibration: parallel circles use the
/// inward normal, meridians the outward one.
inline NormalOrientation orientation_for(Fibration f) {
    return f == Fibration::Meridians ? NormalOrientation::Outward : NormalOrientation::Inward;
}

/// A circle-invariant vortex sheet: surface of revolution plus vorticity
/// density, with the fibration/orientation convention fixed at construction.
struct RevolutionSheet {
    ProfileCurve curve;
    VorticityProfile vorticity;
    Fibration fibration = Fibration::ParallelCircles;
    NormalOrientation normal_orientation = NormalOrientation::Inward;

    const Grid& grid() const { return curve.grid; }
    int n() const { return curve.grid.n(); }
};

/// Time derivative of the sheet state (xi, eta, zeta samples).
struct TangentData {
    std::vector<double> xi_dot;
    std::vector<double> eta_dot;
    std::vector<double> zeta_dot;
};

/// Truncated trigonometric series a0 + sum_k (cos_k cos(k rho) + sin_k sin(k rho)).
struct FourierSeries {
    double a0 = 0.0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;

    double eval(double rho) const;
};

/// Spectral description of zeta: winding P, constant c, periodic part series.
struct ZetaSpec {
    double winding = 0.0;
    double theta_constant = 0.0;
    FourierSeries periodic;
};

/// One violated invariant found by validate().
struct Violation {
    std::string message;
    int sample_index = -1;
    double margin = 0.0;
};

/// Torus of radii R > r > 0. ParallelCircles: zeta = (ell / 2 pi) rho, c = 0.
/// Meridians: zeta = 0, c = ell / 2 pi.
RevolutionSheet make_torus_preset(double R, double r, Fibration fibration, double ell, int n_samples = 128);

/// Sheet with profile curve and vorticity synthesized from trigonometric series.
RevolutionSheet make_fourier_preset(const FourierSeries& xi, const FourierSeries& eta, const ZetaSpec& zeta,
                                    Fibration fibration, int n_samples = 128,
                                    double eps_speed = kEpsSpeed);

/// Checks all type invariants; returns the list of violations (never throws).
std::vector<Violation> validate(const RevolutionSheet& sheet, double eps_speed = kEpsSpeed);

/// Throws GeometryError if validate() reports any violation.
void require_valid(const RevolutionSheet& sheet);

}  // namespace vsheet
