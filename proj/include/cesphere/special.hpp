#pragma once

// Gegenbauer (ultraspherical) polynomials, Cesaro coefficients, and stable
// log-gamma ratios. Everything here is pure and re-entrant.

#include <vector>

namespace cesphere {

// Order nu = (N-1)/2 and the highest degree the recurrence is evaluated to.
struct GegenbauerParam {
    double nu;
    int k_max;

    GegenbauerParam(double nu_, int k_max_);

    static constexpr int kMaxSupportedDegree = 4096;
};

// Cesaro order alpha > -1.
struct CesaroOrder {
    double alpha;

    explicit CesaroOrder(double alpha_);
};

// P_k^nu(t) from the three-term recurrence
//   k P_k = 2(k+nu-1) t P_{k-1} - (k+2nu-2) P_{k-2},   P_0 = 1, P_1 = 2 nu t.
// |t| <= 1 + 1e-12 is accepted and clamped to [-1, 1].
double gegenbauer_eval(const GegenbauerParam& param, int k, double t);

// All degrees 0..k_max at one t, single recurrence pass. Entry k equals
// gegenbauer_eval(param, k, t) bit for bit.
std::vector<double> gegenbauer_profile(const GegenbauerParam& param, double t);

// Cesaro coefficient A_n^alpha = Gamma(n+alpha+1) / (Gamma(alpha+1) n!),
// computed as prod_{j=1..n} (alpha+j)/j, switched to log space for n > 64.
double cesaro_coeff(const CesaroOrder& order, long n);

// A_{n-k}^alpha / A_n^alpha = prod_{j=n-k+1..n} j/(alpha+j), factors taken in
// descending j. For alpha >= 0 the value lies in (0, 1] and is nonincreasing
// in k; alpha = 0 gives exactly 1.
double cesaro_multiplier(const CesaroOrder& order, long n, long k);

// Gamma(a)/Gamma(b) as exp(lgamma(a) - lgamma(b)); a, b > 0.
double log_gamma_ratio(double a, double b);

// Rows of cesaro_multiplier for a fixed n, filled by the same descending-j
// factor order as the per-call routine, so row(n)[k] is bitwise equal to
// cesaro_multiplier(order, n, k). Shared by the maximal-operator scans that
// need every (n, k) pair.
class CesaroMultiplierTable {
public:
    CesaroMultiplierTable(const CesaroOrder& order, long n_max);

    // Multipliers for degrees k = 0..n.
    [[nodiscard]] const std::vector<double>& row(long n) const;
    [[nodiscard]] long n_max() const { return n_max_; }

private:
    long n_max_;
    std::vector<std::vector<double>> rows_;
};

}  // namespace cesphere
