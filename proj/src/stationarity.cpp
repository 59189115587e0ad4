#include "vsheet/stationarity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vsheet/geometry.hpp"
#include "vsheet/spectral.hpp"

namespace vsheet {
namespace {

double relative_variation(std::span<const double> f) {
    const auto [lo, hi] = std::minmax_element(f.begin(), f.end());
    double amax = 0.0;
    for (double x : f) amax = std::max(amax, std::abs(x));
    return amax == 0.0 ? 0.0 : (*hi - *lo) / amax;
}

// Best rational approximation p/q of x with q <= max_den, by continued fractions.
std::pair<long, long> rational_reconstruct(double x, int max_den) {
    long p0 = 1, q0 = 0;  // previous convergent
    long p1 = static_cast<long>(std::floor(x)), q1 = 1;
    double frac = x - std::floor(x);
    while (frac > 1e-15) {
        const double inv = 1.0 / frac;
        const long a = static_cast<long>(std::floor(inv));
        const long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        frac = inv - std::floor(inv);
    }
    return {p1, q1};
}

}  // namespace

StationarityReport stationarity_report(const RevolutionSheet& sheet, double tol_geodesic,
                                       double tol_const) {
    if (sheet.fibration == Fibration::Custom)
        throw NotImplementedError("stationarity_report: Custom fibrations are not supported");
    const CurvatureField f = curvature_field(sheet);

    StationarityReport report;
    report.kbB_field.resize(f.k_n.size());
    for (size_t i = 0; i < f.k_n.size(); ++i) {
        report.max_abs_kg = std::max(report.max_abs_kg, std::abs(f.k_g[i]));
        // Equals +/- k beta(B) on geodesic fibers (Darboux vs Frenet frames);
        // the sign matches the meridian-torus convention.
        report.kbB_field[i] = f.k_n[i] * f.beta_ng[i];
    }
    report.kbB_relative_variation = relative_variation(report.kbB_field);
    report.is_stationary =
        report.max_abs_kg <= tol_geodesic && report.kbB_relative_variation <= tol_const;
    return report;
}

VorticityProfile geodesic_fibration_form(const ProfileCurve& curve, double c, double kappa) {
    if (c == 0.0) throw ContractError("geodesic_fibration_form requires c != 0");
    const int n = curve.grid.n();
    const double min_xi = *std::min_element(curve.xi.begin(), curve.xi.end());
    if (min_xi <= std::abs(kappa))
        throw GeometryError("Clairaut bound violated: min xi = " + std::to_string(min_xi) +
                            " <= |kappa| = " + std::to_string(std::abs(kappa)));

    const auto xi_rho = spectral_derivative(curve.xi);
    const auto eta_rho = spectral_derivative(curve.eta);
    std::vector<double> zeta_rho(n);
    for (int i = 0; i < n; ++i) {
        const double r = std::hypot(xi_rho[i], eta_rho[i]);
        const double xi = curve.xi[i];
        zeta_rho[i] = -c * kappa * r / (xi * std::sqrt(xi * xi - kappa * kappa));
    }
    const double winding = periodic_quadrature(zeta_rho);
    std::vector<double> periodic_part(n);
    for (int i = 0; i < n; ++i) periodic_part[i] = zeta_rho[i] - winding / kTwoPi;
    return VorticityProfile{curve.grid, spectral_antiderivative(periodic_part), winding, c};
}

std::vector<double> kn_betang_closed_form(const ProfileCurve& curve, std::span<const double> zeta_rho,
                                          double c) {
    if (c == 0.0)
        throw ContractError("kn_betang_closed_form requires c != 0 (use the parallel-circle pipeline)");
    const int n = curve.grid.n();
    if (static_cast<int>(zeta_rho.size()) != n)
        throw ContractError("kn_betang_closed_form: zeta_rho length mismatch");

    const auto xi_rho = spectral_derivative(curve.xi);
    const auto eta_rho = spectral_derivative(curve.eta);
    const auto xi_rr = spectral_second_derivative(curve.xi);
    const auto eta_rr = spectral_second_derivative(curve.eta);

    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const double xi = curve.xi[i];
        const double r2 = xi_rho[i] * xi_rho[i] + eta_rho[i] * eta_rho[i];
        const double z2c2 = zeta_rho[i] * zeta_rho[i] / (c * c);
        const double bracket = eta_rr[i] * xi_rho[i] - eta_rho[i] * xi_rr[i] + xi * eta_rho[i] * z2c2;
        // Overall sign fixed so the meridian-torus limit (zeta_rho = 0) agrees
        // with k_n * beta(n_g) from curvature_field, i.e. -c / (r xi).
        out[i] = -c / (r2 * xi * std::sqrt(r2 + xi * xi * z2c2)) * bracket;
    }
    return out;
}

StationarityReport geodesic_fibration_report(const ProfileCurve& curve, double c, double kappa,
                                             double tol_const) {
    const VorticityProfile form = geodesic_fibration_form(curve, c, kappa);
    const auto zeta_rho = form.zeta_rho();

    StationarityReport report;
    report.max_abs_kg = 0.0;  // fibers are geodesics by construction
    report.kbB_field = kn_betang_closed_form(curve, zeta_rho, c);
    report.kbB_relative_variation = relative_variation(report.kbB_field);
    report.is_stationary = report.kbB_relative_variation <= tol_const;
    return report;
}

PeriodClass classify(const RevolutionSheet& sheet, int max_denominator, double tol) {
    require_valid(sheet);
    const double p_rho = sheet.vorticity.rho_winding;       // period over the rho cycle
    const double p_theta = kTwoPi * sheet.vorticity.theta_constant;  // over the theta cycle
    const double scale = std::max({std::abs(p_rho), std::abs(p_theta), 1.0});

    const bool rho_zero = std::abs(p_rho) <= tol * scale;
    const bool theta_zero = std::abs(p_theta) <= tol * scale;
    if (rho_zero && theta_zero)
        throw PeriodError("both cycle periods vanish: trivial period group");
    if (theta_zero) return {1, 0, std::abs(p_rho)};
    if (rho_zero) return {0, 1, std::abs(p_theta)};

    const double ratio = p_rho / p_theta;
    const auto [p, q] = rational_reconstruct(std::abs(ratio), max_denominator);
    if (q == 0 || std::abs(std::abs(ratio) - static_cast<double>(p) / q) > tol * std::max(1.0, std::abs(ratio)))
        throw PeriodError("period ratio " + std::to_string(ratio) +
                          " is not rational within tolerance: period group is dense");

    const long g = std::gcd(p, static_cast<long>(q));
    long m = p / g, nn = q / g;
    double ell = std::abs(p_theta) / nn;
    // Fix signs so that P = m ell and 2 pi c = n ell with ell > 0.
    if (p_rho < 0) m = -m;
    if (p_theta < 0) nn = -nn;
    return {static_cast<int>(m), static_cast<int>(nn), ell};
}

}  // namespace vsheet
