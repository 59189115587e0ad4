#include <cmath>
#include <random>

#include <doctest.h>

#include "vsheet/prequant.hpp"
#include "vsheet/sheet.hpp"

using namespace vsheet;

namespace {
const double pi = kTwoPi / 2;
}

TEST_CASE("onsager_feynman detects integer products") {
    const PrequantReport r1 = onsager_feynman(2 * pi, 3.0);
    CHECK(r1.prequantizable);
    CHECK(r1.k.has_value());
    CHECK(*r1.k == 3);

    const PrequantReport r2 = onsager_feynman(4 * pi, 1.0);
    CHECK(r2.prequantizable);
    CHECK(*r2.k == 2);

    const PrequantReport r3 = onsager_feynman(2 * pi, 1.0);
    CHECK(r3.prequantizable);
    CHECK(*r3.k == 1);
}

TEST_CASE("onsager_feynman rejects non-integer products") {
    const PrequantReport r = onsager_feynman(3.0, 1.0);
    CHECK_FALSE(r.prequantizable);
    CHECK_FALSE(r.k.has_value());
    CHECK(r.product_over_2pi == doctest::Approx(3.0 / kTwoPi));
}

TEST_CASE("m_a_map is well defined exactly when prequantizable") {
    CHECK(m_a_map(0.0, 2 * pi, 3.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(m_a_map(0.1, 3.0, 1.0), PrequantError);
}

TEST_CASE("m_a_map is a homomorphism of circles") {
    const double a = 2 * pi, ell = 3.0;
    std::mt19937 rng(11u);
    std::uniform_real_distribution<double> uni(0.0, ell);
    for (int trial = 0; trial < 1000; ++trial) {
        const double z1 = uni(rng), z2 = uni(rng);
        const double lhs = m_a_map(std::fmod(z1 + z2, ell), a, ell);
        const double rhs = std::fmod(m_a_map(z1, a, ell) + m_a_map(z2, a, ell), kTwoPi);
        double d = std::abs(lhs - rhs);
        d = std::min(d, std::abs(d - kTwoPi));
        CHECK(d < 1e-12);
    }
}

TEST_CASE("kernel_order counts the lattice points exactly") {
    CHECK(kernel_order(2 * pi, 3.0) == 3);
    CHECK(kernel_order(4 * pi, 1.0) == 2);
    CHECK(kernel_order(2 * pi, 1.0) == 1);
    CHECK_THROWS_AS(kernel_order(3.0, 1.0), PrequantError);
}

TEST_CASE("sheet-level condition uses enclosed volume and smallest period") {
    // a = 4 pi^2 for the (R, r) = (2, 1) torus; with ell = 1 the product over
    // 2 pi is 2 pi, irrational: not prequantizable.
    const auto sheet = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 64);
    const PrequantReport rep = onsager_feynman(sheet);
    CHECK(rep.a == doctest::Approx(4 * pi * pi).epsilon(1e-13));
    CHECK(rep.ell == doctest::Approx(1.0));
    CHECK_FALSE(rep.prequantizable);

    // Scaling the strength to ell = 1 / (2 pi) makes a ell = 2 pi, so k = 1.
    const auto tuned = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0 / kTwoPi, 64);
    CHECK(onsager_feynman(tuned, 1e-6).prequantizable);
}

TEST_CASE("flux derivative returns minus the constant pairing") {
    const auto sheet = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 64);
    // v = d_theta: beta(v) = c = 0, so the derivative vanishes.
    const std::vector<double> zero(sheet.n(), 0.0), one(sheet.n(), 1.0);
    CHECK(flux_derivative(sheet, zero, one) == doctest::Approx(0.0));

    const auto meridian = make_torus_preset(2.0, 1.0, Fibration::Meridians, 1.0, 64);
    // v = d_theta on the meridian sheet: beta(v) = c = 1 / (2 pi).
    CHECK(flux_derivative(meridian, zero, one) == doctest::Approx(-1.0 / kTwoPi).epsilon(1e-13));
}

TEST_CASE("flux derivative rejects non-constant pairings") {
    const auto sheet = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 64);
    std::vector<double> v_rho(sheet.n()), zero(sheet.n(), 0.0);
    for (int i = 0; i < sheet.n(); ++i) v_rho[i] = std::cos(sheet.grid().rho(i));
    CHECK_THROWS_AS(flux_derivative(sheet, v_rho, zero), ContractError);
}
