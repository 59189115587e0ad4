#pragma once

#include <span>
#include <vector>

namespace vsheet::kernels {

/// Execution policy for the pointwise kernels. Parallel variants use OpenMP
/// and produce output identical to the serial reference.
enum class Exec { Serial, Parallel };

/// Closed-form fiber curvatures on a parallel-circle sheet:
///   k_n = eta_rho / (xi s),  k_g = -xi_rho / (xi s),  s = sqrt(xi_rho^2 + eta_rho^2).
void fiber_curvatures(std::span<const double> xi, std::span<const double> xi_rho,
                      std::span<const double> eta_rho, std::span<double> k_n, std::span<double> k_g,
                      Exec exec = Exec::Parallel);

/// Closed-form Hamiltonian RHS on the parallel-circle component:
///   xi_t   =  xi_rho eta_rho / (xi s^2)
///   eta_t  = -xi_rho^2      / (xi s^2)
///   zeta_t =  eta_rho zeta_rho / (xi s^2)
void hamiltonian_rhs(std::span<const double> xi, std::span<const double> xi_rho,
                     std::span<const double> eta_rho, std::span<const double> zeta_rho,
                     std::span<double> xi_t, std::span<double> eta_t, std::span<double> zeta_t,
                     Exec exec = Exec::Parallel);

/// Index of the first sample with xi < eps_axis or speed < eps_speed, or -1.
int find_singular_sample(std::span<const double> xi, std::span<const double> xi_rho,
                         std::span<const double> eta_rho, double eps_axis, double eps_speed);

/// Deterministic blocked sum: fixed 64-sample blocks accumulated in index
/// order, independent of thread count.
double block_sum(std::span<const double> f, Exec exec = Exec::Parallel);

}  // namespace vsheet::kernels
