#include <cmath>

#include <doctest.h>

#include "vsheet/dynamics.hpp"
#include "vsheet/sheet.hpp"

using namespace vsheet;

namespace {

RevolutionSheet wavy_sheet(int n) {
    FourierSeries xi{2.0, {0.3}, {0.1, 0.05}};
    FourierSeries eta{0.0, {0.05}, {1.0}};
    ZetaSpec zeta{1.0, 0.0, {0.0, {}, {0.1}}};
    return make_fourier_preset(xi, eta, zeta, Fibration::ParallelCircles, n);
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

double sup_state_distance(const RevolutionSheet& a, const RevolutionSheet& b) {
    double m = 0.0;
    for (int i = 0; i < a.n(); ++i) {
        m = std::max(m, std::abs(a.curve.xi[i] - b.curve.xi[i]));
        m = std::max(m, std::abs(a.curve.eta[i] - b.curve.eta[i]));
        m = std::max(m,
                     std::abs(a.vorticity.zeta_periodic[i] - b.vorticity.zeta_periodic[i]));
    }
    return m;
}

}  // namespace

TEST_CASE("closed-form RHS on the unit-strength torus") {
    // On the parallel torus zeta_rho = ell / 2 pi, s = 1:
    // zeta_t = cos(rho) / (2 pi (2 + cos rho)); at rho = 0 that is 1 / (6 pi).
    const auto sheet = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 64);
    const TangentData t = rhs_closed_form(sheet);
    CHECK(t.xi_dot[0] == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(t.eta_dot[0] == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(t.zeta_dot[0] == doctest::Approx(1.0 / (6 * kTwoPi / 2)).epsilon(1e-12));
    const int q = 16;  // rho = pi / 2
    CHECK(t.xi_dot[q] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(t.eta_dot[q] == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("geometric and closed-form RHS agree") {
    for (int n : {64, 128}) {
        const auto sheet = wavy_sheet(n);
        CHECK(sup_distance(rhs_closed_form(sheet), rhs_geometric(sheet)) < 1e-10);
    }
}

TEST_CASE("crosscheck mode runs clean when the pipelines agree") {
    SimConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_final = 5e-3;
    cfg.rhs_mode = RhsMode::CrossCheck;
    const Trajectory traj = simulate(wavy_sheet(64), cfg);
    CHECK_FALSE(traj.truncated);
    CHECK(traj.times.back() == doctest::Approx(5e-3));
}

TEST_CASE("dynamics are restricted to parallel circles") {
    const auto meridian = make_torus_preset(2.0, 1.0, Fibration::Meridians, 1.0, 64);
    CHECK_THROWS_AS(rhs_closed_form(meridian), NotImplementedError);
    CHECK_THROWS_AS(simulate(meridian, SimConfig{}), NotImplementedError);
}

TEST_CASE("RK4 step is time-reversible to high order") {
    const auto sheet = wavy_sheet(64);
    const double dt = 1e-3;
    const auto back = step_rk4(step_rk4(sheet, dt), -dt);
    CHECK(sup_state_distance(sheet, back) < 1e-12);
}

TEST_CASE("conserved quantities drift at roundoff level") {
    SimConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_final = 0.05;
    const Trajectory traj = simulate(make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 64),
                                     cfg);
    CHECK(traj.max_rel_drift.a < 1e-11);
    CHECK(traj.max_rel_drift.h < 1e-11);
    CHECK(traj.max_rel_drift.k < 1e-11);
}

TEST_CASE("a singularity truncates the trajectory with exit data intact") {
    // A nearly pinched torus integrated with a huge step blows past the
    // axis guard inside the first few RK4 stages.
    const auto torus = make_torus_preset(1.0 + 1e-4, 1.0, Fibration::ParallelCircles, 1.0, 64);
    SimConfig cfg;
    cfg.dt = 0.5;
    cfg.t_final = 50.0;
    const Trajectory traj = simulate(torus, cfg);
    CHECK(traj.truncated);
    CHECK_FALSE(traj.truncation_reason.empty());
    CHECK_FALSE(traj.times.empty());
}

TEST_CASE("record_every thins the series but keeps the endpoints") {
    SimConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_final = 0.01;
    cfg.record_every = 5;
    const Trajectory traj = simulate(make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 32),
                                     cfg);
    CHECK(traj.times.front() == 0.0);
    CHECK(traj.times.back() == doctest::Approx(0.01));
    CHECK(traj.times.size() == 3);  // t = 0, 0.005, 0.01
}
