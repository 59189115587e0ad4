// Timing comparison of the serial reference kernels against the OpenMP
// variants on synthetic profiles. Prints a small table; no assertions.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "vsheet/kernels.hpp"

using vsheet::kernels::Exec;

namespace {

double time_ms(int reps, const auto& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
    std::printf("%10s %12s %14s %14s %8s\n", "n", "kernel", "serial (ms)", "parallel (ms)", "speedup");
    for (int n : {1 << 14, 1 << 17, 1 << 20}) {
        std::vector<double> xi(n), xi_rho(n), eta_rho(n), zeta_rho(n);
        for (int i = 0; i < n; ++i) {
            const double rho = 2.0 * M_PI * i / n;
            xi[i] = 2.0 + std::cos(rho);
            xi_rho[i] = -std::sin(rho);
            eta_rho[i] = std::cos(rho);
            zeta_rho[i] = 1.0 / (2.0 * M_PI);
        }
        std::vector<double> a(n), b(n), c(n);
        const int reps = n > (1 << 18) ? 20 : 100;

        const double rhs_s = time_ms(reps, [&] {
            vsheet::kernels::hamiltonian_rhs(xi, xi_rho, eta_rho, zeta_rho, a, b, c, Exec::Serial);
        });
        const double rhs_p = time_ms(reps, [&] {
            vsheet::kernels::hamiltonian_rhs(xi, xi_rho, eta_rho, zeta_rho, a, b, c, Exec::Parallel);
        });
        std::printf("%10d %12s %14.4f %14.4f %8.2f\n", n, "rhs", rhs_s, rhs_p, rhs_s / rhs_p);

        const double curv_s = time_ms(reps, [&] {
            vsheet::kernels::fiber_curvatures(xi, xi_rho, eta_rho, a, b, Exec::Serial);
        });
        const double curv_p = time_ms(reps, [&] {
            vsheet::kernels::fiber_curvatures(xi, xi_rho, eta_rho, a, b, Exec::Parallel);
        });
        std::printf("%10d %12s %14.4f %14.4f %8.2f\n", n, "curvature", curv_s, curv_p, curv_s / curv_p);

        volatile double sink = 0.0;
        const double sum_s = time_ms(reps, [&] { sink = vsheet::kernels::block_sum(xi, Exec::Serial); });
        const double sum_p =
            time_ms(reps, [&] { sink = vsheet::kernels::block_sum(xi, Exec::Parallel); });
        (void)sink;
        std::printf("%10d %12s %14.4f %14.4f %8.2f\n", n, "block_sum", sum_s, sum_p, sum_s / sum_p);
    }
    return 0;
}
