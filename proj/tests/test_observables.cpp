#include <cmath>

#include <doctest.h>

#include "vsheet/observables.hpp"
#include "vsheet/sheet.hpp"

using namespace vsheet;

namespace {
const double pi = kTwoPi / 2;
}

TEST_CASE("parallel torus observables match the analytic values") {
    const auto sheet = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 64);
    const ObservableSet obs = observable_set(sheet);
    CHECK(obs.volume_a == doctest::Approx(4 * pi * pi).epsilon(1e-13));
    CHECK(obs.hamiltonian_h == doctest::Approx(4 * pi).epsilon(1e-13));
    CHECK(obs.vertical_impulse_k == doctest::Approx(4.5 * pi).epsilon(1e-13));
}

TEST_CASE("hamiltonian scales linearly in the vorticity strength") {
    const auto one = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 64);
    const auto three = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 3.0, 64);
    CHECK(hamiltonian(three) == doctest::Approx(3 * hamiltonian(one)).epsilon(1e-13));
    CHECK(vertical_impulse(three) == doctest::Approx(3 * vertical_impulse(one)).epsilon(1e-13));
}

TEST_CASE("vertical impulse is defined on parallel circles only") {
    const auto meridian = make_torus_preset(2.0, 1.0, Fibration::Meridians, 1.0, 64);
    CHECK_THROWS_AS(vertical_impulse(meridian), Error);
}

TEST_CASE("off-axis SE(3) momentum components vanish by circle invariance") {
    const auto sheet = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 64);
    const auto J = se3_momentum(sheet);
    CHECK(J[0] == 0.0);
    CHECK(J[1] == 0.0);
    CHECK(J[3] == 0.0);
    CHECK(J[4] == 0.0);
    CHECK(J[5] == doctest::Approx(vertical_impulse(sheet)).epsilon(1e-13));
}

TEST_CASE("observable_set bundles the momentum map consistently") {
    const auto meridian = make_torus_preset(2.0, 1.0, Fibration::Meridians, 1.0, 64);
    const ObservableSet obs = observable_set(meridian);
    CHECK(obs.vertical_impulse_k == obs.se3_momentum[5]);
    CHECK(obs.hamiltonian_h == doctest::Approx(kTwoPi).epsilon(1e-13));
    CHECK(obs.volume_a == doctest::Approx(4 * pi * pi).epsilon(1e-13));
}

TEST_CASE("vertical translations of the profile leave a, h, k unchanged") {
    auto sheet = make_torus_preset(2.0, 1.0, Fibration::ParallelCircles, 1.0, 64);
    const ObservableSet before = observable_set(sheet);
    for (double& e : sheet.curve.eta) e += 0.7;
    const ObservableSet after = observable_set(sheet);
    CHECK(after.volume_a == doctest::Approx(before.volume_a).epsilon(1e-13));
    CHECK(after.hamiltonian_h == doctest::Approx(before.hamiltonian_h).epsilon(1e-13));
    CHECK(after.vertical_impulse_k == doctest::Approx(before.vertical_impulse_k).epsilon(1e-13));
}
