#include "vsheet/spectral.hpp"

#include <fftw3.h>

#include <complex>
#include <map>
#include <mutex>

#include "vsheet/errors.hpp"
#include "vsheet/kernels.hpp"
#include "vsheet/sheet.hpp"

namespace vsheet {
namespace {

// Cached forward/inverse r2c plans per grid size. Plans are created with
// FFTW_UNALIGNED so they can be executed on arbitrary caller buffers via the
// new-array interface; plan creation is guarded, execution is thread-safe.
struct PlanPair {
    fftw_plan forward = nullptr;
    fftw_plan inverse = nullptr;
};

PlanPair plans_for(int n) {
    static std::map<int, PlanPair> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<double> real(n);
    std::vector<std::complex<double>> spec(n / 2 + 1);
    PlanPair p;
    p.forward = fftw_plan_dft_r2c_1d(n, real.data(), reinterpret_cast<fftw_complex*>(spec.data()),
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.inverse = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex*>(spec.data()), real.data(),
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache[n] = p;
    return p;
}

void check_even(std::span<const double> f) {
    if (f.size() < 2 || f.size() % 2 != 0)
        throw ContractError("spectral operations need an even sample count, got " +
                            std::to_string(f.size()));
}

std::vector<std::complex<double>> forward(std::span<const double> f) {
    const int n = static_cast<int>(f.size());
    std::vector<double> in(f.begin(), f.end());
    std::vector<std::complex<double>> spec(n / 2 + 1);
    fftw_execute_dft_r2c(plans_for(n).forward, in.data(), reinterpret_cast<fftw_complex*>(spec.data()));
    return spec;
}

std::vector<double> inverse(std::vector<std::complex<double>>& spec, int n) {
    std::vector<double> out(n);
    fftw_execute_dft_c2r(plans_for(n).inverse, reinterpret_cast<fftw_complex*>(spec.data()), out.data());
    const double scale = 1.0 / n;
    for (double& x : out) x *= scale;
    return out;
}

}  // namespace

std::vector<double> spectral_derivative(std::span<const double> periodic, double winding) {
    check_even(periodic);
    const int n = static_cast<int>(periodic.size());
    auto spec = forward(periodic);
    for (int k = 0; k < n / 2; ++k) spec[k] *= std::complex<double>(0.0, k);
    spec[n / 2] = 0.0;  // Nyquist
    auto out = inverse(spec, n);
    const double slope = winding / kTwoPi;
    for (double& x : out) x += slope;
    return out;
}

std::vector<double> spectral_second_derivative(std::span<const double> periodic) {
    check_even(periodic);
    const int n = static_cast<int>(periodic.size());
    auto spec = forward(periodic);
    for (int k = 0; k < n / 2; ++k) spec[k] *= -static_cast<double>(k) * k;
    spec[n / 2] = 0.0;
    return inverse(spec, n);
}

std::vector<double> spectral_antiderivative(std::span<const double> f) {
    check_even(f);
    const int n = static_cast<int>(f.size());
    auto spec = forward(f);
    spec[0] = 0.0;
    for (int k = 1; k < n / 2; ++k) spec[k] /= std::complex<double>(0.0, k);
    spec[n / 2] = 0.0;
    return inverse(spec, n);
}

std::vector<double> dealias_two_thirds(std::span<const double> f) {
    check_even(f);
    const int n = static_cast<int>(f.size());
    auto spec = forward(f);
    const int cutoff = n / 3;
    for (int k = cutoff + 1; k <= n / 2; ++k) spec[k] = 0.0;
    return inverse(spec, n);
}

double periodic_quadrature(std::span<const double> f) {
    return kTwoPi / static_cast<double>(f.size()) * kernels::block_sum(f);
}

}  // namespace vsheet
