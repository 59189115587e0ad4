#include "vsheet/dynamics.hpp"

#include <cmath>

#include "vsheet/geometry.hpp"
#include "vsheet/kernels.hpp"
#include "vsheet/spectral.hpp"

namespace vsheet {
namespace {

void check_regular(std::span<const double> xi, std::span<const double> xi_rho,
                   std::span<const double> eta_rho) {
    const int bad = kernels::find_singular_sample(xi, xi_rho, eta_rho, kEpsAxis, kEpsSpeed);
    if (bad >= 0) throw SingularityError("singular parametrization during RHS evaluation", bad);
}

TangentData rhs_closed_form_raw(const std::vector<double>& xi, const std::vector<double>& eta,
                                const std::vector<double>& zeta_periodic, double winding) {
    const auto xi_rho = spectral_derivative(xi);
    const auto eta_rho = spectral_derivative(eta);
    const auto zeta_rho = spectral_derivative(zeta_periodic, winding);
    check_regular(xi, xi_rho, eta_rho);

    const size_t n = xi.size();
    TangentData t{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
    kernels::hamiltonian_rhs(xi, xi_rho, eta_rho, zeta_rho, t.xi_dot, t.eta_dot, t.zeta_dot);
    return t;
}

RevolutionSheet advance(const RevolutionSheet& base, const TangentData& t, double dt) {
    RevolutionSheet s = base;
    for (int i = 0; i < base.n(); ++i) {
        s.curve.xi[i] += dt * t.xi_dot[i];
        s.curve.eta[i] += dt * t.eta_dot[i];
        s.vorticity.zeta_periodic[i] += dt * t.zeta_dot[i];
    }
    return s;
}

double sup_distance(const TangentData& a, const TangentData& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.xi_dot.size(); ++i) {
        m = std::max(m, std::abs(a.xi_dot[i] - b.xi_dot[i]));
        m = std::max(m, std::abs(a.eta_dot[i] - b.eta_dot[i]));
        m = std::max(m, std::abs(a.zeta_dot[i] - b.zeta_dot[i]));
    }
    return m;
}

TangentData eval_rhs(const RevolutionSheet& sheet, RhsMode mode, double crosscheck_tol,
                     bool dealias) {
    TangentData t;
    switch (mode) {
        case RhsMode::ClosedForm:
            t = rhs_closed_form_raw(sheet.curve.xi, sheet.curve.eta, sheet.vorticity.zeta_periodic,
                                    sheet.vorticity.rho_winding);
            break;
        case RhsMode::Geometric:
            t = rhs_geometric(sheet);
            break;
        case RhsMode::CrossCheck: {
            t = rhs_closed_form_raw(sheet.curve.xi, sheet.curve.eta, sheet.vorticity.zeta_periodic,
                                    sheet.vorticity.rho_winding);
            const TangentData g = rhs_geometric(sheet);
            const double d = sup_distance(t, g);
            if (d > crosscheck_tol)
                throw CrossCheckError("closed-form and geometric RHS disagree (sup-norm " +
                                      std::to_string(d) + ")");
            break;
        }
    }
    if (dealias) {
        t.xi_dot = dealias_two_thirds(t.xi_dot);
        t.eta_dot = dealias_two_thirds(t.eta_dot);
        t.zeta_dot = dealias_two_thirds(t.zeta_dot);
    }
    return t;
}

}  // namespace

TangentData rhs_closed_form(const RevolutionSheet& sheet) {
    require_valid(sheet);
    if (sheet.fibration != Fibration::ParallelCircles)
        throw NotImplementedError("dynamics are implemented on the parallel-circle component only");
    return rhs_closed_form_raw(sheet.curve.xi, sheet.curve.eta, sheet.vorticity.zeta_periodic,
                               sheet.vorticity.rho_winding);
}

TangentData rhs_geometric(const RevolutionSheet& sheet) {
    if (sheet.fibration != Fibration::ParallelCircles)
        throw NotImplementedError("dynamics are implemented on the parallel-circle component only");
    const auto xi_rho = spectral_derivative(sheet.curve.xi);
    const auto eta_rho = spectral_derivative(sheet.curve.eta);
    check_regular(sheet.curve.xi, xi_rho, eta_rho);

    const CurvatureField f = curvature_field(sheet);
    const int n = sheet.n();
    TangentData t{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
    for (int i = 0; i < n; ++i) {
        // Normal motion k_g along the plane-curve normal (horizontal lift);
        // at theta = 0 the surface normal is (n_x, 0, n_z).
        t.xi_dot[i] = f.k_g[i] * f.n[i][0];
        t.eta_dot[i] = f.k_g[i] * f.n[i][2];
        // Vorticity transport by the tangential binormal curvature.
        t.zeta_dot[i] = f.k_n[i] * f.beta_ng[i];
    }
    return t;
}

RevolutionSheet step_rk4(const RevolutionSheet& sheet, double dt, RhsMode mode, bool dealias) {
    const double tol = SimConfig{}.crosscheck_tol;
    const TangentData k1 = eval_rhs(sheet, mode, tol, dealias);
    const TangentData k2 = eval_rhs(advance(sheet, k1, dt / 2), mode, tol, dealias);
    const TangentData k3 = eval_rhs(advance(sheet, k2, dt / 2), mode, tol, dealias);
    const TangentData k4 = eval_rhs(advance(sheet, k3, dt), mode, tol, dealias);

    RevolutionSheet out = sheet;
    for (int i = 0; i < sheet.n(); ++i) {
        out.curve.xi[i] += dt / 6 * (k1.xi_dot[i] + 2 * k2.xi_dot[i] + 2 * k3.xi_dot[i] + k4.xi_dot[i]);
        out.curve.eta[i] +=
            dt / 6 * (k1.eta_dot[i] + 2 * k2.eta_dot[i] + 2 * k3.eta_dot[i] + k4.eta_dot[i]);
        out.vorticity.zeta_periodic[i] +=
            dt / 6 * (k1.zeta_dot[i] + 2 * k2.zeta_dot[i] + 2 * k3.zeta_dot[i] + k4.zeta_dot[i]);
    }
    return out;
}

Trajectory simulate(const RevolutionSheet& sheet, const SimConfig& config) {
    require_valid(sheet);
    if (sheet.fibration != Fibration::ParallelCircles)
        throw NotImplementedError("simulate: dynamics are implemented on the parallel-circle component");
    if (config.dt <= 0 || config.t_final < 0) throw ContractError("simulate: dt > 0, t_final >= 0 required");

    Trajectory traj;
    RevolutionSheet state = sheet;
    const ObservableSet initial = observable_set(state);

    auto record = [&](double t, const RevolutionSheet& s) {
        const ObservableSet obs = observable_set(s);
        traj.times.push_back(t);
        traj.states.push_back(s);
        traj.observables.push_back(obs);
        const double da = std::abs((obs.volume_a - initial.volume_a) / initial.volume_a);
        const double dh = std::abs((obs.hamiltonian_h - initial.hamiltonian_h) / initial.hamiltonian_h);
        const double dk =
            std::abs((obs.vertical_impulse_k - initial.vertical_impulse_k) / initial.vertical_impulse_k);
        traj.max_rel_drift.a = std::max(traj.max_rel_drift.a, da);
        traj.max_rel_drift.h = std::max(traj.max_rel_drift.h, dh);
        traj.max_rel_drift.k = std::max(traj.max_rel_drift.k, dk);
        const double worst = std::max({da, dh, dk});
        if (worst > config.drift_tolerance)
            traj.warnings.push_back("conservation drift " + std::to_string(worst) + " at t = " +
                                    std::to_string(t) + " exceeds tolerance");
    };

    record(0.0, state);

    const long n_full = static_cast<long>(std::floor(config.t_final / config.dt + 1e-12));
    const double remainder = config.t_final - n_full * config.dt;
    double t = 0.0;
    try {
        for (long step = 1; step <= n_full; ++step) {
            state = step_rk4(state, config.dt, config.rhs_mode, config.dealias);
            t = step * config.dt;
            if (step % config.record_every == 0 || step == n_full)
                record(t, state);
        }
        if (remainder > 1e-12 * config.dt) {
            state = step_rk4(state, remainder, config.rhs_mode, config.dealias);
            record(config.t_final, state);
        }
    } catch (const SingularityError& e) {
        traj.truncated = true;
        traj.truncation_reason = e.what();
    }
    return traj;
}

}  // namespace vsheet
