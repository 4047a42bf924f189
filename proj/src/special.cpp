#include "cesphere/special.hpp"

#include "cesphere/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cesphere {

namespace {

constexpr double kClampSlack = 1e-12;

double clamp_to_unit(double t) {
    if (std::abs(t) > 1.0 + kClampSlack) {
        throw std::domain_error("gegenbauer: |t| exceeds 1 + 1e-12");
    }
    if (t > 1.0) return 1.0;
    if (t < -1.0) return -1.0;
    return t;
}

}  // namespace

GegenbauerParam::GegenbauerParam(double nu_, int k_max_) : nu(nu_), k_max(k_max_) {
    if (!(nu > 0.0)) throw std::domain_error("GegenbauerParam: nu must be positive");
    if (k_max < 0 || k_max > kMaxSupportedDegree) {
        throw std::out_of_range("GegenbauerParam: k_max out of [0, 4096]");
    }
}

CesaroOrder::CesaroOrder(double alpha_) : alpha(alpha_) {
    if (!(alpha > -1.0)) throw std::domain_error("CesaroOrder: alpha must exceed -1");
}

double gegenbauer_eval(const GegenbauerParam& param, int k, double t) {
    if (k < 0 || k > param.k_max) {
        throw std::out_of_range("gegenbauer_eval: degree outside [0, k_max]");
    }
    t = clamp_to_unit(t);
    if (k == 0) return 1.0;
    double p_prev = 1.0;
    double p_curr = 2.0 * param.nu * t;
    for (int i = 2; i <= k; ++i) {
        const double ki = static_cast<double>(i);
        const double p_next =
            (2.0 * (ki + param.nu - 1.0) * t * p_curr - (ki + 2.0 * param.nu - 2.0) * p_prev) / ki;
        p_prev = p_curr;
        p_curr = p_next;
    }
    return p_curr;
}

std::vector<double> gegenbauer_profile(const GegenbauerParam& param, double t) {
    t = clamp_to_unit(t);
    std::vector<double> out(static_cast<std::size_t>(param.k_max) + 1);
    out[0] = 1.0;
    if (param.k_max == 0) return out;
    out[1] = 2.0 * param.nu * t;
    for (int i = 2; i <= param.k_max; ++i) {
        const double ki = static_cast<double>(i);
        out[i] = (2.0 * (ki + param.nu - 1.0) * t * out[i - 1] -
                  (ki + 2.0 * param.nu - 2.0) * out[i - 2]) /
                 ki;
    }
    return out;
}

double cesaro_coeff(const CesaroOrder& order, long n) {
    if (n < 0) throw std::out_of_range("cesaro_coeff: n must be nonnegative");
    if (n <= 64) {
        double acc = 1.0;
        for (long j = 1; j <= n; ++j) {
            acc *= (order.alpha + static_cast<double>(j)) / static_cast<double>(j);
        }
        return acc;
    }
    NeumaierSum log_acc;
    for (long j = 1; j <= n; ++j) {
        log_acc.add(std::log1p(order.alpha / static_cast<double>(j)));
    }
    return std::exp(log_acc.value());
}

double cesaro_multiplier(const CesaroOrder& order, long n, long k) {
    if (k < 0 || n < 0 || k > n) {
        throw std::out_of_range("cesaro_multiplier: need 0 <= k <= n");
    }
    double acc = 1.0;
    for (long j = n; j > n - k; --j) {
        acc *= static_cast<double>(j) / (order.alpha + static_cast<double>(j));
    }
    return acc;
}

double log_gamma_ratio(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::domain_error("log_gamma_ratio: arguments must be positive");
    }
    return std::exp(log_gamma(a) - log_gamma(b));
}

CesaroMultiplierTable::CesaroMultiplierTable(const CesaroOrder& order, long n_max) : n_max_(n_max) {
    if (n_max < 0) throw std::out_of_range("CesaroMultiplierTable: n_max must be nonnegative");
    rows_.resize(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        auto& row = rows_[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(n) + 1);
        // row[k] = row[k-1] * (n-k+1)/(alpha+n-k+1) appends the next factor of
        // the descending-j product, reproducing cesaro_multiplier exactly.
        row[0] = 1.0;
        for (long k = 1; k <= n; ++k) {
            const double j = static_cast<double>(n - k + 1);
            row[static_cast<std::size_t>(k)] =
                row[static_cast<std::size_t>(k - 1)] * (j / (order.alpha + j));
        }
    }
}

const std::vector<double>& CesaroMultiplierTable::row(long n) const {
    if (n < 0 || n > n_max_) throw std::out_of_range("CesaroMultiplierTable: row out of range");
    return rows_[static_cast<std::size_t>(n)];
}

}  // namespace cesphere
