#include "vsheet/observables.hpp"

#include <cmath>

#include "vsheet/geometry.hpp"
#include "vsheet/spectral.hpp"

namespace vsheet {

double hamiltonian(const RevolutionSheet& sheet) {
    require_valid(sheet);
    if (sheet.fibration == Fibration::Custom)
        throw NotImplementedError("hamiltonian: Custom fibrations are not supported");
    const auto sigma = fiber_arclength_form(sheet);
    return wedge_integral(sigma.rho, sigma.theta, sheet);
}

double vertical_impulse(const RevolutionSheet& sheet) {
    require_valid(sheet);
    if (sheet.fibration != Fibration::ParallelCircles)
        throw NotImplementedError("vertical_impulse is defined on the parallel-circle component");
    // k = (1/2) * integral of xi^2 d theta ^ beta.
    const int n = sheet.n();
    std::vector<double> zero(n, 0.0), alpha_theta(n);
    for (int i = 0; i < n; ++i) alpha_theta[i] = sheet.curve.xi[i] * sheet.curve.xi[i];
    return 0.5 * wedge_integral(zero, alpha_theta, sheet);
}

std::array<double, 6> se3_momentum(const RevolutionSheet& sheet) {
    require_valid(sheet);
    const int n = sheet.n();
    const auto& xi = sheet.curve.xi;
    const auto& eta = sheet.curve.eta;
    const auto eta_rho = spectral_derivative(eta);

    std::array<double, 6> J{};

    // The theta integral of every off-axis pairing carries a cos(theta) or
    // sin(theta) factor, so those four components vanish identically.
    J[0] = J[1] = 0.0;
    J[3] = J[4] = 0.0;

    // (omega = e3): alpha = (1/2) ||x||^2 dz pulled back to (rho, theta).
    std::vector<double> alpha_rho(n), zero(n, 0.0);
    for (int i = 0; i < n; ++i) alpha_rho[i] = (xi[i] * xi[i] + eta[i] * eta[i]) * eta_rho[i];
    J[2] = 0.5 * wedge_integral(alpha_rho, zero, sheet);

    // (v = e3): alpha = (1/2) xi^2 d theta; the same quadrature as the
    // vertical impulse on parallel-circle sheets.
    std::vector<double> alpha_theta(n);
    for (int i = 0; i < n; ++i) alpha_theta[i] = xi[i] * xi[i];
    J[5] = 0.5 * wedge_integral(zero, alpha_theta, sheet);

    return J;
}

ObservableSet observable_set(const RevolutionSheet& sheet) {
    ObservableSet obs;
    obs.volume_a = enclosed_volume(sheet);
    obs.hamiltonian_h = hamiltonian(sheet);
    obs.se3_momentum = se3_momentum(sheet);
    // The axial translation pairing equals the vertical impulse on parallel
    // circles and extends it to the other fibrations.
    obs.vertical_impulse_k = obs.se3_momentum[5];
    return obs;
}

}  // namespace vsheet
