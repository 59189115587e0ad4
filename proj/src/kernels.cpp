#include "vsheet/kernels.hpp"

#include <cmath>

#include "vsheet/errors.hpp"

namespace vsheet::kernels {
namespace {

constexpr int kBlock = 64;

void check_sizes(size_t a, size_t b, const char* what) {
    if (a != b) throw ContractError(std::string(what) + ": array length mismatch");
}

}  // namespace

void fiber_curvatures(std::span<const double> xi, std::span<const double> xi_rho,
                      std::span<const double> eta_rho, std::span<double> k_n, std::span<double> k_g,
                      Exec exec) {
    const auto n = static_cast<long>(xi.size());
    check_sizes(xi.size(), xi_rho.size(), "fiber_curvatures");
    check_sizes(xi.size(), eta_rho.size(), "fiber_curvatures");
    check_sizes(xi.size(), k_n.size(), "fiber_curvatures");
    check_sizes(xi.size(), k_g.size(), "fiber_curvatures");
#pragma omp parallel for if (exec == Exec::Parallel) schedule(static)
    for (long i = 0; i < n; ++i) {
        const double s = std::sqrt(xi_rho[i] * xi_rho[i] + eta_rho[i] * eta_rho[i]);
        k_n[i] = eta_rho[i] / (xi[i] * s);
        k_g[i] = -xi_rho[i] / (xi[i] * s);
    }
}

void hamiltonian_rhs(std::span<const double> xi, std::span<const double> xi_rho,
                     std::span<const double> eta_rho, std::span<const double> zeta_rho,
                     std::span<double> xi_t, std::span<double> eta_t, std::span<double> zeta_t,
                     Exec exec) {
    const auto n = static_cast<long>(xi.size());
    check_sizes(xi.size(), xi_rho.size(), "hamiltonian_rhs");
    check_sizes(xi.size(), eta_rho.size(), "hamiltonian_rhs");
    check_sizes(xi.size(), zeta_rho.size(), "hamiltonian_rhs");
#pragma omp parallel for if (exec == Exec::Parallel) schedule(static)
    for (long i = 0; i < n; ++i) {
        const double s2 = xi_rho[i] * xi_rho[i] + eta_rho[i] * eta_rho[i];
        const double denom = xi[i] * s2;
        xi_t[i] = xi_rho[i] * eta_rho[i] / denom;
        eta_t[i] = -xi_rho[i] * xi_rho[i] / denom;
        zeta_t[i] = eta_rho[i] * zeta_rho[i] / denom;
    }
}

int find_singular_sample(std::span<const double> xi, std::span<const double> xi_rho,
                         std::span<const double> eta_rho, double eps_axis, double eps_speed) {
    const auto n = static_cast<long>(xi.size());
    for (long i = 0; i < n; ++i) {
        if (xi[i] < eps_axis) return static_cast<int>(i);
        const double s = std::hypot(xi_rho[i], eta_rho[i]);
        if (s < eps_speed) return static_cast<int>(i);
    }
    return -1;
}

double block_sum(std::span<const double> f, Exec exec) {
    const auto n = static_cast<long>(f.size());
    const long n_blocks = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(n_blocks, 0.0);
#pragma omp parallel for if (exec == Exec::Parallel) schedule(static)
    for (long b = 0; b < n_blocks; ++b) {
        double s = 0.0;
        const long end = std::min(n, (b + 1) * static_cast<long>(kBlock));
        for (long i = b * kBlock; i < end; ++i) s += f[i];
        partial[b] = s;
    }
    double total = 0.0;
    for (double s : partial) total += s;
    return total;
}

}  // namespace vsheet::kernels
