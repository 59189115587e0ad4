#include <cmath>

#include <doctest.h>

#include "vsheet/sheet.hpp"
#include "vsheet/stationarity.hpp"

using namespace vsheet;

TEST_CASE("meridian torus is not stationary and matches the closed-form field") {
    const auto sheet = make_torus_preset(2.0, 1.0, Fibration::Meridians, 1.0, 128);
    const StationarityReport rep = stationarity_report(sheet);
    CHECK_FALSE(rep.is_stationary);
    CHECK(rep.max_abs_kg < 1e-12);
    for (int i = 0; i < sheet.n(); ++i) {
        const double rho = sheet.grid().rho(i);
        CHECK(rep.kbB_field[i] ==
              doctest::Approx(-1.0 / (kTwoPi * (2.0 + std::cos(rho)))).epsilon(1e-11));
    }
}

TEST_CASE("parallel torus fails the geodesic test") {
    const auto sheet = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 128);
    const StationarityReport rep = stationarity_report(sheet);
    CHECK_FALSE(rep.is_stationary);
    // Continuum maximum of |sin rho / (2 + cos rho)| is 1 / sqrt(3); the grid
    // maximum sits within O(h) of it.
    CHECK(rep.max_abs_kg == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-3));
    CHECK(rep.max_abs_kg <= 1.0 / std::sqrt(3.0) + 1e-12);
}

TEST_CASE("geodesic fibration form matches the Clairaut expression") {
    const auto torus = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 128);
    const double kappa = 0.5, c = 1.0;
    const VorticityProfile form = geodesic_fibration_form(torus.curve, c, kappa);
    const auto zr = form.zeta_rho();
    // At rho = 0: xi = 3, speed 1, so zeta_rho = -0.5 / (3 sqrt(8.75)).
    CHECK(zr[0] == doctest::Approx(-0.5 / (3.0 * std::sqrt(8.75))).epsilon(1e-10));
    CHECK(form.theta_constant == c);
}

TEST_CASE("geodesic fibration form requires the Clairaut bound") {
    const auto torus = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 64);
    CHECK_THROWS_AS(geodesic_fibration_form(torus.curve, 1.0, 1.5), GeometryError);
    CHECK_THROWS_AS(geodesic_fibration_form(torus.curve, 0.0, 0.5), ContractError);
}

TEST_CASE("closed form reduces to the meridian value at kappa -> 0 vorticity") {
    const auto torus = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 128);
    const std::vector<double> zero(torus.n(), 0.0);
    const auto field = kn_betang_closed_form(torus.curve, zero, 1.0 / kTwoPi);
    for (int i = 0; i < torus.n(); ++i) {
        const double rho = torus.grid().rho(i);
        CHECK(field[i] == doctest::Approx(-1.0 / (kTwoPi * (2.0 + std::cos(rho)))).epsilon(1e-10));
    }
}

TEST_CASE("geodesic fibration sweep on the torus is never stationary") {
    const auto torus = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 128);
    for (int j = 1; j <= 9; ++j) {
        const StationarityReport rep = geodesic_fibration_report(torus.curve, 1.0, 0.1 * j);
        CHECK(rep.max_abs_kg == 0.0);
        CHECK(rep.kbB_relative_variation > 1e-3);
        CHECK_FALSE(rep.is_stationary);
    }
}

TEST_CASE("classify recovers the component data") {
    const PeriodClass p = classify(make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 64));
    CHECK(p.m == 1);
    CHECK(p.n == 0);
    CHECK(p.ell == doctest::Approx(1.0));

    const PeriodClass m = classify(make_torus_preset(2.0, 1.0, Fibration::Meridians, 1.0, 64));
    CHECK(m.m == 0);
    CHECK(m.n == 1);
    CHECK(m.ell == doctest::Approx(1.0));
}

TEST_CASE("classify reconstructs rational period ratios") {
    FourierSeries xi{2.0, {1.0}, {}};
    FourierSeries eta{0.0, {}, {1.0}};
    const PeriodClass s =
        classify(make_fourier_preset(xi, eta, ZetaSpec{3.0, 2.0 / kTwoPi, {}}, Fibration::Custom, 64));
    CHECK(s.m == 3);
    CHECK(s.n == 2);
    CHECK(s.ell == doctest::Approx(1.0));
}

TEST_CASE("classify rejects irrational period ratios") {
    FourierSeries xi{2.0, {1.0}, {}};
    FourierSeries eta{0.0, {}, {1.0}};
    const double irr = std::sqrt(2.0);
    CHECK_THROWS_AS(
        classify(make_fourier_preset(xi, eta, ZetaSpec{irr, 1.0 / kTwoPi, {}}, Fibration::Custom, 64)),
        PeriodError);
}
