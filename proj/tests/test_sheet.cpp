#include <cmath>

#include <doctest.h>

#include "vsheet/sheet.hpp"

using namespace vsheet;

TEST_CASE("grid rejects odd or tiny sizes") {
    CHECK_THROWS_AS(Grid(15), ContractError);
    CHECK_THROWS_AS(Grid(8), ContractError);
    CHECK_NOTHROW(Grid(16));
}

TEST_CASE("torus presets satisfy their invariants") {
    const auto p = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0);
    CHECK(validate(p).empty());
    CHECK(p.vorticity.rho_winding == 1.0);
    CHECK(p.vorticity.theta_constant == 0.0);
    CHECK(p.normal_orientation == NormalOrientation::Inward);

    const auto m = make_torus_preset(2.0, 1.0, Fibration::Meridians, 1.0);
    CHECK(validate(m).empty());
    CHECK(m.vorticity.rho_winding == 0.0);
    CHECK(m.vorticity.theta_constant == doctest::Approx(1.0 / kTwoPi));
    CHECK(m.normal_orientation == NormalOrientation::Outward);
}

TEST_CASE("torus preset rejects self-intersecting radii") {
    CHECK_THROWS_AS(make_torus_preset(1.0, 2.0, Fibration::ParallelCircles, 1.0), GeometryError);
    CHECK_THROWS_AS(make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, -1.0), GeometryError);
}

TEST_CASE("fourier preset rejects curves touching the axis") {
    FourierSeries xi{0.5, {1.0}, {}};  // min xi = -0.5
    FourierSeries eta{0.0, {}, {1.0}};
    CHECK_THROWS_AS(make_fourier_preset(xi, eta, ZetaSpec{1.0, 0.0, {}}, Fibration::ParallelCircles),
                    GeometryError);
}

TEST_CASE("fourier preset rejects degenerate parametrizations") {
    FourierSeries xi{2.0, {}, {}};  // constant curve, zero speed
    FourierSeries eta{0.0, {}, {}};
    CHECK_THROWS_AS(make_fourier_preset(xi, eta, ZetaSpec{1.0, 0.0, {}}, Fibration::ParallelCircles),
                    GeometryError);
}

TEST_CASE("validate flags orientation-convention violations") {
    auto sheet = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0);
    sheet.vorticity.rho_winding = -1.0;  // zeta_rho < 0 breaks beta(n_g) > 0
    CHECK_FALSE(validate(sheet).empty());
    CHECK_THROWS_AS(require_valid(sheet), GeometryError);
}

TEST_CASE("validate flags nonzero zeta_rho on meridian sheets") {
    auto sheet = make_torus_preset(2.0, 1.0, Fibration::Meridians, 1.0);
    for (int i = 0; i < sheet.n(); ++i)
        sheet.vorticity.zeta_periodic[i] = 0.1 * std::sin(sheet.grid().rho(i));
    CHECK_FALSE(validate(sheet).empty());
}

TEST_CASE("zeta_rho includes the winding slope") {
    const auto sheet = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 2.0, 32);
    for (double v : sheet.vorticity.zeta_rho()) CHECK(v == doctest::Approx(2.0 / kTwoPi));
}
