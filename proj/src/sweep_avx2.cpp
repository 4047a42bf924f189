#include "cesphere/sweep.hpp"

#if defined(CESPHERE_HAVE_AVX2_KERNEL)

#include <immintrin.h>

namespace cesphere::detail {

// Four t lanes per iteration; the recurrence and the two-sum accumulation are
// the same IEEE operations the scalar kernel performs, in the same order, so
// each lane reproduces the scalar result bit for bit. No FMA: contraction
// would change rounding against the reference.
void sweep_avx2(double nu, const double* weights, std::size_t n_weights,
                const double* t, double* out, std::size_t count) {
    const std::size_t vec_end = count - (count % 4);
    for (std::size_t i = 0; i < vec_end; i += 4) {
        const __m256d ti = _mm256_loadu_pd(t + i);
        if (n_weights == 0) {
            _mm256_storeu_pd(out + i, _mm256_setzero_pd());
            continue;
        }
        __m256d p_prev = _mm256_set1_pd(1.0);
        __m256d sum = _mm256_mul_pd(_mm256_set1_pd(weights[0]), _mm256_set1_pd(1.0));
        __m256d comp = _mm256_setzero_pd();
        if (n_weights == 1) {
            _mm256_storeu_pd(out + i, _mm256_add_pd(sum, comp));
            continue;
        }
        __m256d p_curr = _mm256_mul_pd(_mm256_set1_pd(2.0 * nu), ti);
        {
            const __m256d term = _mm256_mul_pd(_mm256_set1_pd(weights[1]), p_curr);
            const __m256d s = _mm256_add_pd(sum, term);
            const __m256d bb = _mm256_sub_pd(s, sum);
            const __m256d err = _mm256_add_pd(_mm256_sub_pd(sum, _mm256_sub_pd(s, bb)),
                                              _mm256_sub_pd(term, bb));
            comp = _mm256_add_pd(comp, err);
            sum = s;
        }
        for (std::size_t k = 2; k < n_weights; ++k) {
            const double kd = static_cast<double>(k);
            const __m256d a = _mm256_set1_pd(2.0 * (kd + nu - 1.0));
            const __m256d b = _mm256_set1_pd(kd + 2.0 * nu - 2.0);
            const __m256d p_next = _mm256_div_pd(
                _mm256_sub_pd(_mm256_mul_pd(_mm256_mul_pd(a, ti), p_curr),
                              _mm256_mul_pd(b, p_prev)),
                _mm256_set1_pd(kd));
            p_prev = p_curr;
            p_curr = p_next;
            const __m256d term = _mm256_mul_pd(_mm256_set1_pd(weights[k]), p_curr);
            const __m256d s = _mm256_add_pd(sum, term);
            const __m256d bb = _mm256_sub_pd(s, sum);
            const __m256d err = _mm256_add_pd(_mm256_sub_pd(sum, _mm256_sub_pd(s, bb)),
                                              _mm256_sub_pd(term, bb));
            comp = _mm256_add_pd(comp, err);
            sum = s;
        }
        _mm256_storeu_pd(out + i, _mm256_add_pd(sum, comp));
    }
    if (vec_end < count) {
        sweep_scalar(nu, weights, n_weights, t + vec_end, out + vec_end, count - vec_end);
    }
}

}  // namespace cesphere::detail

#endif  // CESPHERE_HAVE_AVX2_KERNEL
