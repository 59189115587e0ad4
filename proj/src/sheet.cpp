#include "vsheet/sheet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vsheet/spectral.hpp"

namespace vsheet {

std::vector<double> VorticityProfile::zeta_rho() const {
    return spectral_derivative(zeta_periodic, rho_winding);
}

double FourierSeries::eval(double rho) const {
    double v = a0;
    for (size_t k = 0; k < cos_coeffs.size(); ++k) v += cos_coeffs[k] * std::cos((k + 1) * rho);
    for (size_t k = 0; k < sin_coeffs.size(); ++k) v += sin_coeffs[k] * std::sin((k + 1) * rho);
    return v;
}

RevolutionSheet make_torus_preset(double R, double r, Fibration fibration, double ell, int n_samples) {
    if (!(R > r && r > 0))
        throw GeometryError("torus preset requires R > r > 0 (self-intersecting otherwise)");
    if (!(ell > 0)) throw GeometryError("torus preset requires ell > 0");
    Grid grid(n_samples);
    ProfileCurve curve{grid, std::vector<double>(n_samples), std::vector<double>(n_samples)};
    for (int i = 0; i < n_samples; ++i) {
        const double rho = grid.rho(i);
        curve.xi[i] = R + r * std::cos(rho);
        curve.eta[i] = r * std::sin(rho);
    }
    VorticityProfile vort{grid, std::vector<double>(n_samples, 0.0), 0.0, 0.0};
    switch (fibration) {
        case Fibration::ParallelCircles:
            vort.rho_winding = ell;  // zeta = (ell / 2 pi) rho
            break;
        case Fibration::Meridians:
            vort.theta_constant = ell / kTwoPi;  // beta = (ell / 2 pi) d theta
            break;
        case Fibration::Custom:
            throw NotImplementedError("torus preset supports ParallelCircles and Meridians only");
    }
    return RevolutionSheet{std::move(curve), std::move(vort), fibration, orientation_for(fibration)};
}

RevolutionSheet make_fourier_preset(const FourierSeries& xi, const FourierSeries& eta, const ZetaSpec& zeta,
                                    Fibration fibration, int n_samples, double eps_speed) {
    Grid grid(n_samples);
    ProfileCurve curve{grid, std::vector<double>(n_samples), std::vector<double>(n_samples)};
    VorticityProfile vort{grid, std::vector<double>(n_samples), zeta.winding, zeta.theta_constant};
    for (int i = 0; i < n_samples; ++i) {
        const double rho = grid.rho(i);
        curve.xi[i] = xi.eval(rho);
        curve.eta[i] = eta.eval(rho);
        vort.zeta_periodic[i] = zeta.periodic.eval(rho);
    }
    const double min_xi = *std::min_element(curve.xi.begin(), curve.xi.end());
    if (min_xi <= 0)
        throw GeometryError("profile curve touches the rotation axis (min xi = " +
                            std::to_string(min_xi) + ")");
    const auto xi_rho = spectral_derivative(curve.xi);
    const auto eta_rho = spectral_derivative(curve.eta);
    for (int i = 0; i < n_samples; ++i) {
        const double s = std::hypot(xi_rho[i], eta_rho[i]);
        if (s < eps_speed)
            throw GeometryError("degenerate parametrization: speed " + std::to_string(s) +
                                " at sample " + std::to_string(i));
    }
    return RevolutionSheet{std::move(curve), std::move(vort), fibration, orientation_for(fibration)};
}

std::vector<Violation> validate(const RevolutionSheet& sheet, double eps_speed) {
    std::vector<Violation> out;
    const int n = sheet.n();

    if (!(sheet.vorticity.grid == sheet.curve.grid) ||
        static_cast<int>(sheet.curve.xi.size()) != n || static_cast<int>(sheet.curve.eta.size()) != n ||
        static_cast<int>(sheet.vorticity.zeta_periodic.size()) != n) {
        out.push_back({"array lengths do not match the grid", -1, 0.0});
        return out;
    }

    int worst = 0;
    for (int i = 1; i < n; ++i)
        if (sheet.curve.xi[i] < sheet.curve.xi[worst]) worst = i;
    if (sheet.curve.xi[worst] <= 0)
        out.push_back({"profile curve touches the rotation axis", worst, sheet.curve.xi[worst]});

    const auto xi_rho = spectral_derivative(sheet.curve.xi);
    const auto eta_rho = spectral_derivative(sheet.curve.eta);
    double min_speed = std::hypot(xi_rho[0], eta_rho[0]);
    int min_speed_at = 0;
    for (int i = 1; i < n; ++i) {
        const double s = std::hypot(xi_rho[i], eta_rho[i]);
        if (s < min_speed) {
            min_speed = s;
            min_speed_at = i;
        }
    }
    if (min_speed < eps_speed)
        out.push_back({"degenerate parametrization", min_speed_at, min_speed - eps_speed});

    if (sheet.normal_orientation != orientation_for(sheet.fibration) &&
        sheet.fibration != Fibration::Custom)
        out.push_back({"fibration/orientation convention mismatch", -1, 0.0});

    if (sheet.fibration == Fibration::ParallelCircles) {
        // R_{1,0}: c = 0, P > 0, zeta_rho > 0 (orientation convention beta(n_g) > 0).
        if (sheet.vorticity.theta_constant != 0.0)
            out.push_back({"parallel-circle sheet requires c = 0", -1, sheet.vorticity.theta_constant});
        if (sheet.vorticity.rho_winding <= 0.0)
            out.push_back({"parallel-circle sheet requires winding P > 0", -1, sheet.vorticity.rho_winding});
        const auto zr = sheet.vorticity.zeta_rho();
        int zworst = 0;
        for (int i = 1; i < n; ++i)
            if (zr[i] < zr[zworst]) zworst = i;
        if (zr[zworst] <= 0)
            out.push_back({"orientation convention beta(n_g) > 0 violated (zeta_rho <= 0)", zworst,
                           zr[zworst]});
    } else if (sheet.fibration == Fibration::Meridians) {
        if (sheet.vorticity.theta_constant == 0.0)
            out.push_back({"meridian sheet requires c != 0", -1, 0.0});
        const auto zr = sheet.vorticity.zeta_rho();
        int zworst = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(zr[i]) > std::abs(zr[zworst])) zworst = i;
        if (std::abs(zr[zworst]) > 1e-12)
            out.push_back({"meridian fibration requires zeta_rho == 0", zworst, zr[zworst]});
    }
    return out;
}

void require_valid(const RevolutionSheet& sheet) {
    const auto violations = validate(sheet);
    if (violations.empty()) return;
    std::ostringstream msg;
    msg << "invalid sheet:";
    for (const auto& v : violations) {
        msg << " [" << v.message;
        if (v.sample_index >= 0) msg << " @ sample " << v.sample_index;
        msg << "]";
    }
    throw GeometryError(msg.str());
}

}  // namespace vsheet
