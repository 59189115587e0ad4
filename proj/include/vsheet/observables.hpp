#pragma once

#include <array>

#include "vsheet/sheet.hpp"

namespace vsheet {

/// Conserved quantities of the Hamiltonian flow on a sheet.
struct ObservableSet {
    double volume_a = 0.0;
    double hamiltonian_h = 0.0;
    double vertical_impulse_k = 0.0;
    /// SE(3) momentum pairings: (omega = e1, e2, e3; v = e1, e2, e3).
    std::array<double, 6> se3_momentum{};
};

/// Total vortex-line length: 2 pi * integral of xi zeta_rho d rho on parallel
/// circles; fiber-length integral (wedge with the arclength form) on meridians.
double hamiltonian(const RevolutionSheet& sheet);

/// Total fiber-disk area k = pi * integral of xi^2 zeta_rho d rho.
/// ParallelCircles only.
double vertical_impulse(const RevolutionSheet& sheet);

/// SE(3) momentum pairings. Off-axis components vanish identically by circle
/// invariance; the (0, e3) component shares its quadrature with vertical_impulse.
std::array<double, 6> se3_momentum(const RevolutionSheet& sheet);

/// Bundles volume, Hamiltonian, vertical impulse and SE(3) momentum. The
/// impulse entry is the (0, e3) momentum pairing, defined for every fibration.
ObservableSet observable_set(const RevolutionSheet& sheet);

}  // namespace vsheet
