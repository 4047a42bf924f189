#pragma once

// Shared numeric plumbing: compensated summation, deterministic parallel
// maps, and adaptive 1-D quadrature used by the geometry and spectral layers.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace cesphere {

// Knuth two-sum: s = fl(a+b), err = exact rounding error. Branch-free, so the
// scalar and vector kernel paths can share the identical operation sequence.
struct TwoSum {
    double sum;
    double err;
};

inline TwoSum two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

// Kahan-Babuska-Neumaier accumulator. Result is order-dependent by design;
// callers fix the order once and keep it across runs and thread counts.
class NeumaierSum {
public:
    void add(double x) {
        const TwoSum r = two_sum(sum_, x);
        sum_ = r.sum;
        comp_ += r.err;
    }
    [[nodiscard]] double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Compensated sum of w[i] * v[i], ascending i.
double weighted_abs_sum(const std::vector<double>& w, const std::vector<double>& v);
double weighted_dot(const std::vector<double>& w, const std::vector<double>& v);

// Static block partition of [0, count) over `threads` workers. Each index is
// written by exactly one worker, so results do not depend on thread count.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t, std::size_t)>& body);

// Thrown when an adaptive integral fails to converge because the integrand
// is not absolutely integrable on the requested interval.
struct integrability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive 1-D quadrature of f on [a, b] (tanh-sinh; handles integrable
// endpoint singularities). Throws integrability_error when the integral
// fails to settle at the requested relative tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-13);

// lgamma without the signgam global, safe for concurrent callers.
double log_gamma(double x);

}  // namespace cesphere
