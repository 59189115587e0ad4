#pragma once

#include <span>
#include <vector>

#include "vsheet/sheet.hpp"

namespace vsheet {

inline constexpr double kTolGeodesic = 1e-10;
inline constexpr double kTolConst = 1e-8;

/// Stationarity criterion: the sheet is a fixed point of the flow iff all
/// fibers are geodesics (k_g = 0) and k_n beta(n_g) (= +/- k beta(B) on
/// geodesic fibers) is constant.
struct StationarityReport {
    double max_abs_kg = 0.0;
    std::vector<double> kbB_field;      // k_n beta(n_g) per sample
    double kbB_relative_variation = 0.0;  // (max - min) / max|.|
    bool is_stationary = false;
};

StationarityReport stationarity_report(const RevolutionSheet& sheet, double tol_geodesic = kTolGeodesic,
                                       double tol_const = kTolConst);

/// The unique vorticity 1-form making the Clairaut fibration of constant
/// kappa geodesic: zeta_rho = -c kappa r / (xi sqrt(xi^2 - kappa^2)), r = speed.
/// Requires min xi > |kappa| and c != 0.
VorticityProfile geodesic_fibration_form(const ProfileCurve& curve, double c, double kappa);

/// Closed form for k_n beta(n_g) on a c != 0 fibration, from spectral first and
/// second derivatives of the profile curve. Signed to agree with the product
/// k_n * beta(n_g) from curvature_field where both pipelines apply.
std::vector<double> kn_betang_closed_form(const ProfileCurve& curve, std::span<const double> zeta_rho,
                                          double c);

/// Stationarity report for the geodesic fibration of constant kappa
/// (k_g = 0 by construction; the field comes from the closed form).
StationarityReport geodesic_fibration_report(const ProfileCurve& curve, double c, double kappa,
                                             double tol_const = kTolConst);

/// Connected-component data: periods P = m ell and 2 pi c = n ell, m, n coprime.
struct PeriodClass {
    int m = 0;
    int n = 0;
    double ell = 0.0;
};

/// Recovers (m, n, ell) from the two cycle periods by continued-fraction
/// rational reconstruction (denominator cap 64, tolerance 1e-9). Throws
/// PeriodError when the period ratio is not rational within tolerance.
PeriodClass classify(const RevolutionSheet& sheet, int max_denominator = 64, double tol = 1e-9);

}  // namespace vsheet
