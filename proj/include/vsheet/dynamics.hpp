#pragma once

#include <string>
#include <vector>

#include "vsheet/observables.hpp"
#include "vsheet/sheet.hpp"

namespace vsheet {

enum class RhsMode { ClosedForm, Geometric, CrossCheck };

struct SimConfig {
    double dt = 1e-4;
    double t_final = 0.1;
    int record_every = 1;
    double drift_tolerance = 1e-6;
    RhsMode rhs_mode = RhsMode::ClosedForm;
    bool dealias = false;            // optional 2/3-rule filter on the RHS
    double crosscheck_tol = 1e-6;    // sup-norm bound in CrossCheck mode
};

struct DriftTriple {
    double a = 0.0, h = 0.0, k = 0.0;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<RevolutionSheet> states;
    std::vector<ObservableSet> observables;
    DriftTriple max_rel_drift;
    bool truncated = false;          // ended early on a singularity
    std::string truncation_reason;
    std::vector<std::string> warnings;
};

/// Closed-form RHS of the Hamilton equations on the parallel-circle component
/// (rational expressions in the spectral derivatives).
TangentData rhs_closed_form(const RevolutionSheet& sheet);

/// Same vector field through the geometric pipeline: velocity k_g along the
/// plane-curve normal, vorticity transport k_n beta(n_g) from the curvature field.
TangentData rhs_geometric(const RevolutionSheet& sheet);

/// Classical 4-stage Runge-Kutta update of (xi, eta, zeta_periodic).
/// Winding P and constant c are never modified.
RevolutionSheet step_rk4(const RevolutionSheet& sheet, double dt, RhsMode mode = RhsMode::ClosedForm,
                         bool dealias = false);

/// Fixed-step RK4 loop with conservation monitoring. A singularity truncates
/// the trajectory gracefully; a CrossCheck mismatch throws CrossCheckError.
Trajectory simulate(const RevolutionSheet& sheet, const SimConfig& config);

}  // namespace vsheet
