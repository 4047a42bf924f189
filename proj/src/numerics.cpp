#include "cesphere/numerics.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <thread>

namespace cesphere {

double weighted_abs_sum(const std::vector<double>& w, const std::vector<double>& v) {
    NeumaierSum acc;
    for (std::size_t i = 0; i < w.size(); ++i) acc.add(w[i] * std::abs(v[i]));
    return acc.value();
}

double weighted_dot(const std::vector<double>& w, const std::vector<double>& v) {
    NeumaierSum acc;
    for (std::size_t i = 0; i < w.size(); ++i) acc.add(w[i] * v[i]);
    return acc.value();
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t, std::size_t)>& body) {
    if (threads < 1) threads = 1;
    const std::size_t t = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    if (t <= 1) {
        body(0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
        const std::size_t lo = count * i / t;
        const std::size_t hi = count * (i + 1) / t;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    if (!(a <= b)) throw std::invalid_argument("integrate_adaptive: a > b");
    if (a == b) return 0.0;
    boost::math::quadrature::tanh_sinh<double> integrator;
    double error = 0.0;
    double l1 = 0.0;
    const double value = integrator.integrate(f, a, b, rel_tol, &error, &l1);
    if (!std::isfinite(value) || !std::isfinite(l1)) {
        throw integrability_error("integrate_adaptive: integrand is not absolutely integrable");
    }
    // tanh-sinh reports its achieved relative error against the L1 norm;
    // a large residual after full refinement signals divergence.
    if (l1 > 0.0 && error > 1e-6 * l1) {
        throw integrability_error("integrate_adaptive: integral failed to converge");
    }
    return value;
}

double log_gamma(double x) {
#if defined(__GLIBC__) || defined(__APPLE__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

}  // namespace cesphere
