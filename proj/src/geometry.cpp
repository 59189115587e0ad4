#include "vsheet/geometry.hpp"

#include <cmath>

#include "vsheet/spectral.hpp"

namespace vsheet {
namespace {

// beta evaluated on a 3D vector tangent to the surface, via its chart
// components w.r.t. x_rho and x_theta (theta = 0 plane).
double beta_on(const Vec3& v, const Vec3& x_rho, const Vec3& x_theta, double zeta_rho, double c,
               double s2, double xi2) {
    const double v_rho = dot(v, x_rho) / s2;
    const double v_theta = dot(v, x_theta) / xi2;
    return zeta_rho * v_rho + c * v_theta;
}

}  // namespace

int orientation_sign(const RevolutionSheet& sheet) {
    return sheet.normal_orientation == NormalOrientation::Inward ? 1 : -1;
}

CurvatureField curvature_field(const RevolutionSheet& sheet) {
    require_valid(sheet);
    if (sheet.fibration == Fibration::Custom)
        throw NotImplementedError("curvature_field: Custom fibrations are not supported");

    const int n = sheet.n();
    const auto& xi = sheet.curve.xi;
    const auto& eta = sheet.curve.eta;
    const auto xi_rho = spectral_derivative(xi);
    const auto eta_rho = spectral_derivative(eta);
    const auto zeta_rho = sheet.vorticity.zeta_rho();
    const double c = sheet.vorticity.theta_constant;

    CurvatureField f{sheet.grid(),
                     std::vector<Vec3>(n), std::vector<Vec3>(n), std::vector<Vec3>(n),
                     std::vector<Vec3>(n), std::vector<Vec3>(n),
                     std::vector<double>(n), std::vector<double>(n), std::vector<double>(n),
                     std::vector<double>(n)};

    const bool parallel = sheet.fibration == Fibration::ParallelCircles;

    // Second derivatives are needed only for the meridian fibers (the profile
    // curve itself is the fiber there).
    std::vector<double> xi_rr, eta_rr;
    if (!parallel) {
        xi_rr = spectral_second_derivative(xi);
        eta_rr = spectral_second_derivative(eta);
    }

#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const Vec3 x_rho{xi_rho[i], 0.0, eta_rho[i]};
        const Vec3 x_theta{0.0, xi[i], 0.0};
        const double s2 = dot(x_rho, x_rho);
        const double xi2 = xi[i] * xi[i];

        // Surface normal: normalize(x_rho x x_theta) points inward.
        Vec3 normal = normalized(cross(x_rho, x_theta));
        if (sheet.normal_orientation == NormalOrientation::Outward) normal = -1.0 * normal;

        Vec3 kN;  // curvature vector of the fiber through (rho_i, theta=0)
        Vec3 ng_dir;
        if (parallel) {
            // Fiber: circle of radius xi at height eta.
            kN = {-1.0 / xi[i], 0.0, 0.0};
            ng_dir = normalized(x_rho);
        } else {
            // Fiber: the profile curve itself.
            const Vec3 x_rr{xi_rr[i], 0.0, eta_rr[i]};
            const double t_dot_a = dot(x_rho, x_rr);
            kN = (1.0 / (s2 * s2)) * (s2 * x_rr - t_dot_a * x_rho);
            ng_dir = normalized(x_theta);
        }

        // Fix the n_g sign by beta(n_g) > 0, then T = n_g x n.
        double bng = beta_on(ng_dir, x_rho, x_theta, zeta_rho[i], c, s2, xi2);
        if (bng < 0) {
            ng_dir = -1.0 * ng_dir;
            bng = -bng;
        }
        const Vec3 T = cross(ng_dir, normal);

        const double k = norm(kN);
        f.T[i] = T;
        f.n_g[i] = ng_dir;
        f.n[i] = normal;
        f.N[i] = (1.0 / k) * kN;
        f.B[i] = cross(T, f.N[i]);
        f.k[i] = k;
        f.k_n[i] = dot(kN, normal);
        f.k_g[i] = dot(kN, ng_dir);
        f.beta_ng[i] = bng;
    }
    return f;
}

double enclosed_volume(const RevolutionSheet& sheet) {
    const auto eta_rho = spectral_derivative(sheet.curve.eta);
    std::vector<double> integrand(sheet.n());
    for (int i = 0; i < sheet.n(); ++i)
        integrand[i] = sheet.curve.xi[i] * sheet.curve.xi[i] * eta_rho[i];
    return M_PI * periodic_quadrature(integrand);
}

double wedge_integral(std::span<const double> alpha_rho, std::span<const double> alpha_theta,
                      const RevolutionSheet& sheet) {
    const size_t n = static_cast<size_t>(sheet.n());
    if (alpha_rho.size() != n || alpha_theta.size() != n)
        throw ContractError("wedge_integral: component arrays must match the sheet grid");
    const auto zeta_rho = sheet.vorticity.zeta_rho();
    const double c = sheet.vorticity.theta_constant;
    std::vector<double> integrand(n);
    for (size_t i = 0; i < n; ++i) integrand[i] = alpha_theta[i] * zeta_rho[i] - alpha_rho[i] * c;
    return orientation_sign(sheet) * kTwoPi * periodic_quadrature(integrand);
}

FormComponents fiber_arclength_form(const RevolutionSheet& sheet) {
    const int n = sheet.n();
    FormComponents sigma{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    if (sheet.fibration == Fibration::ParallelCircles) {
        sigma.theta = sheet.curve.xi;
    } else if (sheet.fibration == Fibration::Meridians) {
        const auto xi_rho = spectral_derivative(sheet.curve.xi);
        const auto eta_rho = spectral_derivative(sheet.curve.eta);
        for (int i = 0; i < n; ++i) sigma.rho[i] = std::hypot(xi_rho[i], eta_rho[i]);
    } else {
        throw NotImplementedError("fiber_arclength_form: Custom fibrations are not supported");
    }
    return sigma;
}

}  // namespace vsheet
