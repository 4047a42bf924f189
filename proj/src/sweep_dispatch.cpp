#include "cesphere/sweep.hpp"

#include <atomic>
#include <stdexcept>

namespace cesphere {

namespace {

std::atomic<SweepBackend> g_backend{SweepBackend::Auto};

bool cpu_has_avx2() {
#if defined(CESPHERE_HAVE_AVX2_KERNEL) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

}  // namespace

bool sweep_backend_supported(SweepBackend backend) {
    switch (backend) {
        case SweepBackend::Auto:
        case SweepBackend::Scalar:
            return true;
        case SweepBackend::Avx2:
            return cpu_has_avx2();
    }
    return false;
}

void set_sweep_backend(SweepBackend backend) {
    if (!sweep_backend_supported(backend)) {
        throw std::runtime_error("sweep backend not supported on this CPU");
    }
    g_backend.store(backend);
}

SweepBackend current_sweep_backend() { return g_backend.load(); }

SweepBackend resolved_sweep_backend() {
    const SweepBackend req = g_backend.load();
    if (req != SweepBackend::Auto) return req;
    return cpu_has_avx2() ? SweepBackend::Avx2 : SweepBackend::Scalar;
}

void weighted_gegenbauer_sweep(double nu, std::span<const double> weights,
                               std::span<const double> t, std::span<double> out) {
    if (out.size() != t.size()) {
        throw std::invalid_argument("weighted_gegenbauer_sweep: output size mismatch");
    }
    switch (resolved_sweep_backend()) {
#if defined(CESPHERE_HAVE_AVX2_KERNEL)
        case SweepBackend::Avx2:
            detail::sweep_avx2(nu, weights.data(), weights.size(), t.data(), out.data(), t.size());
            return;
#endif
        default:
            detail::sweep_scalar(nu, weights.data(), weights.size(), t.data(), out.data(), t.size());
            return;
    }
}

}  // namespace cesphere
