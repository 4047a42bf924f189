#include "cesphere/sweep.hpp"

namespace cesphere::detail {

// Reference kernel. The AVX2 variant mirrors this operation-for-operation;
// any change here must be applied there as well.
void sweep_scalar(double nu, const double* weights, std::size_t n_weights,
                  const double* t, double* out, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        const double ti = t[i];
        if (n_weights == 0) {
            out[i] = 0.0;
            continue;
        }
        // k = 0: P_0 = 1.
        double p_prev = 1.0;
        double sum = weights[0] * 1.0;
        double comp = 0.0;
        if (n_weights == 1) {
            out[i] = sum + comp;
            continue;
        }
        // k = 1: P_1 = 2 nu t.
        double p_curr = (2.0 * nu) * ti;
        {
            const double term = weights[1] * p_curr;
            const double s = sum + term;
            const double bb = s - sum;
            const double err = (sum - (s - bb)) + (term - bb);
            comp = comp + err;
            sum = s;
        }
        for (std::size_t k = 2; k < n_weights; ++k) {
            const double kd = static_cast<double>(k);
            const double a = 2.0 * (kd + nu - 1.0);
            const double b = kd + 2.0 * nu - 2.0;
            const double p_next = (a * ti * p_curr - b * p_prev) / kd;
            p_prev = p_curr;
            p_curr = p_next;
            const double term = weights[k] * p_curr;
            const double s = sum + term;
            const double bb = s - sum;
            const double err = (sum - (s - bb)) + (term - bb);
            comp = comp + err;
            sum = s;
        }
        out[i] = sum + comp;
    }
}

}  // namespace cesphere::detail
