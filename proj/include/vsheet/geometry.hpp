#pragma once

#include <span>
#include <vector>

#include "vsheet/sheet.hpp"
#include "vsheet/vec3.hpp"

namespace vsheet {

/// Darboux and Frenet frames and fiber curvatures along the fiber through
/// each rho-sample, evaluated in the theta = 0 plane (circle invariance).
///
/// Frame table (fixed by beta(n_g) > 0 and T = n_g x n):
///   ParallelCircles: n inward,  n_g = (1/s) d_rho,  T = -(1/xi) d_theta, B = (0,0,-1)
///   Meridians:       n outward, n_g = (1/xi) d_theta, T = -(1/s) d_rho,  B = +n_g
struct CurvatureField {
    Grid grid;
    std::vector<Vec3> T, n_g, n, N, B;
    std::vector<double> k, k_n, k_g;
    std::vector<double> beta_ng;  // beta(n_g) = |gamma|, positive by convention
};

/// Frames and curvatures of the fibration's fibers. Meridians require an
/// exact meridian fibration (zeta_rho identically zero); Custom is rejected.
CurvatureField curvature_field(const RevolutionSheet& sheet);

/// Enclosed volume a = pi * integral of xi^2 eta_rho d rho. Positive for the
/// standard torus presets; sign follows the curve orientation.
double enclosed_volume(const RevolutionSheet& sheet);

/// Integral of alpha ^ beta over the sheet, for a circle-invariant 1-form
/// alpha = alpha_rho(rho) d rho + alpha_theta(rho) d theta. The theta integral
/// is analytic; the orientation sign follows the sheet's normal convention.
double wedge_integral(std::span<const double> alpha_rho, std::span<const double> alpha_theta,
                      const RevolutionSheet& sheet);

/// Components of the fiber arclength form sigma (positive coordinate
/// orientation of the fibers): (0, xi) for parallel circles, (s, 0) for meridians.
struct FormComponents {
    std::vector<double> rho;
    std::vector<double> theta;
};
FormComponents fiber_arclength_form(const RevolutionSheet& sheet);

/// +1 for the inward-normal convention, -1 for outward.
int orientation_sign(const RevolutionSheet& sheet);

}  // namespace vsheet
