#include "vsheet/prequant.hpp"

#include <algorithm>
#include <cmath>

#include "vsheet/geometry.hpp"
#include "vsheet/spectral.hpp"
#include "vsheet/stationarity.hpp"

namespace vsheet {
namespace {

double mod_2pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0) r += kTwoPi;
    return r;
}

/// Distance to the nearest point of 2 pi Z on the circle.
double circle_distance_to_zero(double x) {
    const double r = mod_2pi(x);
    return std::min(r, kTwoPi - r);
}

}  // namespace

PrequantReport onsager_feynman(double a, double ell, double tol_int) {
    PrequantReport report;
    report.a = a;
    report.ell = ell;
    report.product_over_2pi = a * ell / kTwoPi;
    const double nearest = std::round(report.product_over_2pi);
    if (std::abs(report.product_over_2pi - nearest) <= tol_int && nearest >= 1) {
        report.k = static_cast<int>(nearest);
        report.prequantizable = true;
    }
    return report;
}

PrequantReport onsager_feynman(const RevolutionSheet& sheet, double tol_int) {
    const double a = enclosed_volume(sheet);
    if (a <= 0)
        throw GeometryError("prequantization requires positive enclosed volume, got " +
                            std::to_string(a));
    const PeriodClass cls = classify(sheet);
    return onsager_feynman(a, cls.ell, tol_int);
}

double m_a_map(double z, double a, double ell, double tol_int) {
    const double product = a * ell / kTwoPi;
    if (std::abs(product - std::round(product)) > tol_int)
        throw PrequantError("m_a is ill-defined: a * ell / 2 pi = " + std::to_string(product) +
                            " is not an integer");
    return mod_2pi(a * z);
}

int kernel_order(double a, double ell, double tol_int) {
    const double product = a * ell / kTwoPi;
    const double nearest = std::round(product);
    if (std::abs(product - nearest) > tol_int || nearest < 1)
        throw PrequantError("kernel_order requires a * ell in 2 pi Z with a * ell > 0");
    const int k = static_cast<int>(nearest);

    // The kernel must be exactly the lattice { j ell / k }. Scan a refinement
    // of that lattice: only multiples of the refinement factor may map to zero.
    const int refine = 8;
    for (int j = 0; j < refine * k; ++j) {
        const double z = j * ell / (refine * k);
        const bool maps_to_zero = circle_distance_to_zero(a * z) <= 1e-9;
        const bool should = (j % refine == 0);
        if (maps_to_zero != should)
            throw PrequantError("kernel of m_a is not the expected Z_k lattice");
    }
    return k;
}

double flux_derivative(const RevolutionSheet& sheet, std::span<const double> v_rho,
                       std::span<const double> v_theta, double tol_const) {
    const size_t n = static_cast<size_t>(sheet.n());
    if (v_rho.size() != n || v_theta.size() != n)
        throw ContractError("flux_derivative: component arrays must match the sheet grid");
    const auto zeta_rho = sheet.vorticity.zeta_rho();
    const double c = sheet.vorticity.theta_constant;

    std::vector<double> pairing(n);
    for (size_t i = 0; i < n; ++i) pairing[i] = zeta_rho[i] * v_rho[i] + c * v_theta[i];

    const auto [lo, hi] = std::minmax_element(pairing.begin(), pairing.end());
    double amax = 0.0;
    for (double x : pairing) amax = std::max(amax, std::abs(x));
    if (*hi - *lo > tol_const * std::max(1.0, amax))
        throw ContractError("flux_derivative: beta(v) is not constant; v is not in the isotropy algebra");

    return -periodic_quadrature(pairing) / kTwoPi;
}

}  // namespace vsheet
