#pragma once

// Weighted Gegenbauer sweep: the arithmetic core behind every zonal kernel
// evaluation. For each requested t it runs the three-term recurrence once,
// accumulating sum_k w_k P_k^nu(t) with per-lane compensated summation.
//
// Two implementations are provided: a scalar reference and an AVX2 variant
// that assigns one t per vector lane. Both execute the identical operation
// sequence per lane (the build disables FP contraction), so their outputs are
// bitwise equal; the equivalence suite asserts this.

#include <cstddef>
#include <span>

namespace cesphere {

enum class SweepBackend {
    Auto,    // pick the widest backend the CPU supports
    Scalar,
    Avx2,
};

// Process-wide backend selection. Auto resolves once per query; selection
// never changes results, only speed.
void set_sweep_backend(SweepBackend backend);
SweepBackend current_sweep_backend();
SweepBackend resolved_sweep_backend();
bool sweep_backend_supported(SweepBackend backend);

// out[i] = sum_{k=0}^{weights.size()-1} weights[k] * P_k^nu(t[i]).
// Ascending k, compensated accumulation. t values must already lie in [-1, 1].
void weighted_gegenbauer_sweep(double nu, std::span<const double> weights,
                               std::span<const double> t, std::span<double> out);

namespace detail {

void sweep_scalar(double nu, const double* weights, std::size_t n_weights,
                  const double* t, double* out, std::size_t count);

#if defined(__x86_64__) || defined(_M_X64)
#define CESPHERE_HAVE_AVX2_KERNEL 1
void sweep_avx2(double nu, const double* weights, std::size_t n_weights,
                const double* t, double* out, std::size_t count);
#endif

}  // namespace detail

}  // namespace cesphere
