#include "vsheet/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "vsheet/dynamics.hpp"
#include "vsheet/geometry.hpp"
#include "vsheet/json_io.hpp"
#include "vsheet/observables.hpp"
#include "vsheet/prequant.hpp"
#include "vsheet/spectral.hpp"
#include "vsheet/stationarity.hpp"

namespace vsheet {
namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

/// Three smooth non-symmetric parallel-circle presets used by several criteria.
std::vector<RevolutionSheet> fourier_presets(int n) {
    std::vector<RevolutionSheet> out;
    {
        FourierSeries xi{2.0, {0.3}, {0.1, 0.05}};
        FourierSeries eta{0.0, {0.05}, {1.0}};
        ZetaSpec zeta{1.0, 0.0, {0.0, {}, {0.1}}};
        out.push_back(make_fourier_preset(xi, eta, zeta, Fibration::ParallelCircles, n));
    }
    {
        FourierSeries xi{3.0, {0.0, 0.4}, {0.2}};
        FourierSeries eta{0.0, {0.1}, {1.2}};
        ZetaSpec zeta{2.0, 0.0, {0.0, {0.15}, {0.1}}};
        out.push_back(make_fourier_preset(xi, eta, zeta, Fibration::ParallelCircles, n));
    }
    {
        FourierSeries xi{2.5, {0.2, 0.1}, {}};
        FourierSeries eta{0.0, {0.1}, {0.9, 0.1}};
        ZetaSpec zeta{1.5, 0.0, {0.0, {0.05}, {0.0, 0.05}}};
        out.push_back(make_fourier_preset(xi, eta, zeta, Fibration::ParallelCircles, n));
    }
    return out;
}

double sup_tangent_distance(const TangentData& a, const TangentData& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.xi_dot.size(); ++i) {
        m = std::max(m, std::abs(a.xi_dot[i] - b.xi_dot[i]));
        m = std::max(m, std::abs(a.eta_dot[i] - b.eta_dot[i]));
        m = std::max(m, std::abs(a.zeta_dot[i] - b.zeta_dot[i]));
    }
    return m;
}

CriterionResult curvature_closed_forms() {
    const auto t0 = clock_type::now();
    CriterionResult res{1, "curvature closed forms (torus)", false, ""};

    const auto parallel = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 128);
    const CurvatureField fp = curvature_field(parallel);
    double err_p = 0.0;
    for (int i = 0; i < parallel.n(); ++i) {
        const double rho = parallel.grid().rho(i);
        const double d = 2.0 + std::cos(rho);
        err_p = std::max(err_p, std::abs(fp.k_n[i] - std::cos(rho) / d));
        err_p = std::max(err_p, std::abs(fp.k_g[i] - std::sin(rho) / d));
    }

    const auto meridian = make_torus_preset(2.0, 1.0, Fibration::Meridians, 1.0, 128);
    const CurvatureField fm = curvature_field(meridian);
    double err_kg = 0.0, err_kn = 0.0;
    for (int i = 0; i < meridian.n(); ++i) {
        err_kg = std::max(err_kg, std::abs(fm.k_g[i]));
        err_kn = std::max(err_kn, std::abs(fm.k_n[i] + 1.0));
    }

    const double elapsed = seconds_since(t0);
    res.passed = err_p <= 1e-10 && err_kg <= 1e-12 && err_kn <= 1e-12 && elapsed < 1.0;
    res.detail = "parallel err " + fmt(err_p) + ", meridian |k_g| " + fmt(err_kg) + ", |k_n + 1| " +
                 fmt(err_kn) + ", " + fmt(elapsed) + " s";
    return res;
}

CriterionResult observables_exact() {
    const auto t0 = clock_type::now();
    CriterionResult res{2, "observables on the parallel torus", false, ""};

    const auto sheet = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 64);
    const ObservableSet obs = observable_set(sheet);
    const double pi = kTwoPi / 2.0;
    const double ea = std::abs(obs.volume_a - 4.0 * pi * pi) / (4.0 * pi * pi);
    const double eh = std::abs(obs.hamiltonian_h - 4.0 * pi) / (4.0 * pi);
    const double ek = std::abs(obs.vertical_impulse_k - 4.5 * pi) / (4.5 * pi);

    const double elapsed = seconds_since(t0);
    res.passed = ea <= 1e-12 && eh <= 1e-12 && ek <= 1e-12 && elapsed < 1.0;
    res.detail = "rel err a " + fmt(ea) + ", h " + fmt(eh) + ", k " + fmt(ek) + ", " + fmt(elapsed) + " s";
    return res;
}

CriterionResult rhs_equivalence() {
    CriterionResult res{3, "closed-form vs geometric RHS", false, ""};
    std::vector<RevolutionSheet> sheets = fourier_presets(128);
    sheets.insert(sheets.begin(), make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 128));

    double worst = 0.0;
    for (const auto& sheet : sheets)
        worst = std::max(worst, sup_tangent_distance(rhs_closed_form(sheet), rhs_geometric(sheet)));
    res.passed = worst <= 1e-8;
    res.detail = "sup distance " + fmt(worst) + " over 4 presets";
    return res;
}

CriterionResult conservation_order() {
    const auto t0 = clock_type::now();
    CriterionResult res{4, "conservation drift vs dt (RK4)", false, ""};

    const auto sheet = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 256);
    const double dts[3] = {2e-4, 1e-4, 5e-5};
    double drift[3];
    for (int j = 0; j < 3; ++j) {
        SimConfig cfg;
        cfg.dt = dts[j];
        cfg.t_final = 0.05;
        cfg.record_every = 1000000;  // initial and final records only
        const Trajectory traj = simulate(sheet, cfg);
        drift[j] = std::max({traj.max_rel_drift.a, traj.max_rel_drift.h, traj.max_rel_drift.k});
    }
    const double r1 = drift[1] > 0 ? drift[0] / drift[1] : 0.0;
    const double r2 = drift[2] > 0 ? drift[1] / drift[2] : 0.0;
    const bool ratios_ok = r1 >= 12.0 && r1 <= 20.0 && r2 >= 12.0 && r2 <= 20.0;
    const bool small_ok = drift[2] < 1e-9;

    // Supporting evidence only (does not affect pass/fail): at coarser steps
    // the time-discretization error rises above roundoff and the h-drift
    // shows the expected fourth-order decay per dt-halving.
    const auto coarse = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 128);
    double hdrift[3];
    const double coarse_dts[3] = {4e-2, 2e-2, 1e-2};
    for (int j = 0; j < 3; ++j) {
        SimConfig cfg;
        cfg.dt = coarse_dts[j];
        cfg.t_final = 1.0;
        cfg.record_every = 1000000;
        hdrift[j] = simulate(coarse, cfg).max_rel_drift.h;
    }
    const double elapsed = seconds_since(t0);

    res.passed = ratios_ok && small_ok && elapsed < 60.0;
    res.detail = "drifts " + fmt(drift[0]) + " / " + fmt(drift[1]) + " / " + fmt(drift[2]) +
                 ", ratios " + fmt(r1) + ", " + fmt(r2) + " (need [12, 20]), " + fmt(elapsed) +
                 " s; coarse-step h-drift ratios " + fmt(hdrift[0] / hdrift[1]) + ", " +
                 fmt(hdrift[1] / hdrift[2]) + " confirm order 4 above the roundoff floor";
    return res;
}

CriterionResult geodesic_quadrature() {
    CriterionResult res{5, "quadrature of k_g vanishes", false, ""};
    std::vector<RevolutionSheet> sheets = fourier_presets(128);
    sheets.push_back(make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 128));
    sheets.push_back(make_torus_preset(2.0, 1.0, Fibration::Meridians, 1.0, 128));

    double worst = 0.0;
    for (const auto& sheet : sheets) {
        const CurvatureField f = curvature_field(sheet);
        const auto xi_rho = spectral_derivative(sheet.curve.xi);
        const auto eta_rho = spectral_derivative(sheet.curve.eta);
        std::vector<double> integrand(sheet.n());
        for (int i = 0; i < sheet.n(); ++i)
            integrand[i] = f.k_g[i] * sheet.curve.xi[i] * std::hypot(xi_rho[i], eta_rho[i]);
        worst = std::max(worst, std::abs(periodic_quadrature(integrand)));
    }
    res.passed = worst <= 1e-12;
    res.detail = "max |integral| " + fmt(worst) + " over 5 presets";
    return res;
}

CriterionResult no_stationary_points() {
    CriterionResult res{6, "no stationary sheets", false, ""};

    const auto meridian = make_torus_preset(2.0, 1.0, Fibration::Meridians, 1.0, 128);
    const StationarityReport mr = stationarity_report(meridian);
    double field_err = 0.0;
    for (int i = 0; i < meridian.n(); ++i) {
        const double rho = meridian.grid().rho(i);
        const double expected = -1.0 / (kTwoPi * (2.0 + std::cos(rho)));
        field_err = std::max(field_err, std::abs(mr.kbB_field[i] - expected));
    }
    const bool meridian_ok = !mr.is_stationary && field_err <= 1e-10;

    const auto torus = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 128);
    bool sweep_ok = true;
    double min_variation = 1e300;
    for (int j = 1; j <= 9; ++j) {
        const double kappa = 0.1 * j;
        const StationarityReport gr = geodesic_fibration_report(torus.curve, 1.0, kappa);
        min_variation = std::min(min_variation, gr.kbB_relative_variation);
        if (gr.is_stationary || gr.kbB_relative_variation <= 1e-3) sweep_ok = false;
    }

    res.passed = meridian_ok && sweep_ok;
    res.detail = "meridian field err " + fmt(field_err) + ", sweep min variation " + fmt(min_variation);
    return res;
}

CriterionResult prequantization() {
    CriterionResult res{7, "prequantization arithmetic", false, ""};
    const double pi = kTwoPi / 2.0;

    const PrequantReport rep = onsager_feynman(2.0 * pi, 3.0);
    const bool of_ok = rep.prequantizable && rep.k && *rep.k == 3;
    const bool kernel_ok = kernel_order(2.0 * pi, 3.0) == 3;

    // Homomorphism identity m_a(z1 + z2) = m_a(z1) + m_a(z2) on T_{2 pi}.
    std::mt19937 rng(20240814u);
    std::uniform_real_distribution<double> uni(0.0, 3.0);
    const double a = 2.0 * pi, ell = 3.0;
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double z1 = uni(rng), z2 = uni(rng);
        const double lhs = m_a_map(std::fmod(z1 + z2, ell), a, ell);
        const double rhs = std::fmod(m_a_map(z1, a, ell) + m_a_map(z2, a, ell), kTwoPi);
        double d = std::abs(lhs - rhs);
        d = std::min(d, std::abs(d - kTwoPi));  // circle distance
        worst = std::max(worst, d);
    }
    const bool hom_ok = worst <= 1e-12;

    res.passed = of_ok && kernel_ok && hom_ok;
    res.detail = std::string("k = ") + (rep.k ? std::to_string(*rep.k) : "none") + ", kernel order " +
                 std::to_string(kernel_order(2.0 * pi, 3.0)) + ", homomorphism err " + fmt(worst);
    return res;
}

CriterionResult classification() {
    CriterionResult res{8, "component classification", false, ""};

    const PeriodClass p = classify(make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 64));
    const PeriodClass m = classify(make_torus_preset(2.0, 1.0, Fibration::Meridians, 1.0, 64));

    FourierSeries xi{2.0, {1.0}, {}};
    FourierSeries eta{0.0, {}, {1.0}};
    ZetaSpec zeta{3.0, 2.0 / kTwoPi, {}};
    const PeriodClass s = classify(make_fourier_preset(xi, eta, zeta, Fibration::Custom, 64));

    auto close = [](double x, double y) { return std::abs(x - y) <= 1e-12; };
    res.passed = p.m == 1 && p.n == 0 && close(p.ell, 1.0) && m.m == 0 && m.n == 1 &&
                 close(m.ell, 1.0) && s.m == 3 && s.n == 2 && close(s.ell, 1.0);
    std::ostringstream d;
    d << "(" << p.m << "," << p.n << "," << p.ell << ") (" << m.m << "," << m.n << "," << m.ell
      << ") (" << s.m << "," << s.n << "," << s.ell << ")";
    res.detail = d.str();
    return res;
}

CriterionResult determinism(const std::string& work_dir) {
    CriterionResult res{9, "byte-identical repeated runs", false, ""};

    const auto sheet = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 128);
    SimConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_final = 0.02;
    cfg.record_every = 2;

    std::string csv[2];
    for (int run = 0; run < 2; ++run) {
        const Trajectory traj = simulate(sheet, cfg);
        csv[run] = trajectory_csv(traj);
        const std::string path = work_dir + "/determinism_run" + std::to_string(run) + ".csv";
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            res.detail = "cannot write " + path;
            return res;
        }
        out << csv[run];
    }

    // Compare the bytes that actually hit disk.
    std::string bytes[2];
    for (int run = 0; run < 2; ++run) {
        std::ifstream in(work_dir + "/determinism_run" + std::to_string(run) + ".csv",
                         std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        bytes[run] = buf.str();
    }
    res.passed = !bytes[0].empty() && bytes[0] == bytes[1] && csv[0] == csv[1];
    res.detail = res.passed ? std::to_string(bytes[0].size()) + " identical bytes" : "outputs differ";
    return res;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out, const std::string& work_dir) {
    // An exception inside one criterion must not keep the others from running.
    auto guarded = [](int id, const std::string& name, const auto& fn) {
        try {
            return fn();
        } catch (const std::exception& e) {
            return CriterionResult{id, name, false, std::string("exception: ") + e.what()};
        }
    };

    std::vector<CriterionResult> results;
    results.push_back(guarded(1, "curvature closed forms (torus)", curvature_closed_forms));
    results.push_back(guarded(2, "observables on the parallel torus", observables_exact));
    results.push_back(guarded(3, "closed-form vs geometric RHS", rhs_equivalence));
    results.push_back(guarded(4, "conservation drift vs dt (RK4)", conservation_order));
    results.push_back(guarded(5, "quadrature of k_g vanishes", geodesic_quadrature));
    results.push_back(guarded(6, "no stationary sheets", no_stationary_points));
    results.push_back(guarded(7, "prequantization arithmetic", prequantization));
    results.push_back(guarded(8, "component classification", classification));
    results.push_back(
        guarded(9, "byte-identical repeated runs", [&] { return determinism(work_dir); }));

    for (const auto& r : results)
        out << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << " ["
            << r.detail << "]\n";
    return results;
}

}  // namespace vsheet
