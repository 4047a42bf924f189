#include "cesphere/sphere.hpp"

#include "cesphere/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace cesphere {

namespace {

constexpr double kPi = std::numbers::pi;

double unit_sphere_surface(int m) {
    // |S^m| for m >= 1.
    return 2.0 * std::pow(kPi, 0.5 * (m + 1)) / std::tgamma(0.5 * (m + 1));
}

}  // namespace

SpherePoint::SpherePoint(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 3) {
        throw std::invalid_argument("SpherePoint: need at least 3 coordinates (S^2)");
    }
    double norm2 = 0.0;
    for (double c : coords_) norm2 += c * c;
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw std::invalid_argument("SpherePoint: coordinates are not a unit vector");
    }
    if (coords_.size() == 3) {
        const double z = std::clamp(coords_[2], -1.0, 1.0);
        theta_ = std::acos(z);
        phi_ = std::atan2(coords_[1], coords_[0]);
        if (phi_ < 0.0) phi_ += 2.0 * kPi;
    }
}

SpherePoint SpherePoint::from_angles(double theta, double phi) {
    const double st = std::sin(theta);
    std::vector<double> c{st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
    // Renormalize the rounding slop so the unit invariant holds exactly enough.
    double norm = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    for (double& v : c) v /= norm;
    return SpherePoint(std::move(c));
}

double SpherePoint::theta() const {
    if (dim() != 2) throw std::logic_error("SpherePoint: angles cached for S^2 only");
    return theta_;
}

double SpherePoint::phi() const {
    if (dim() != 2) throw std::logic_error("SpherePoint: angles cached for S^2 only");
    return phi_;
}

double geodesic_distance(const SpherePoint& x, const SpherePoint& y) {
    if (x.dim() != y.dim()) {
        throw std::invalid_argument("geodesic_distance: dimension mismatch");
    }
    double dot = 0.0;
    const auto& a = x.coords();
    const auto& b = y.coords();
    for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
    return std::acos(std::clamp(dot, -1.0, 1.0));
}

SpherePoint antipode(const SpherePoint& x) {
    std::vector<double> c = x.coords();
    for (double& v : c) v = -v;
    return SpherePoint(std::move(c));
}

Cap::Cap(SpherePoint center_, double radius_) : center(std::move(center_)), radius(radius_) {
    if (!(radius > 0.0) || radius > kPi) {
        throw std::domain_error("Cap: radius must lie in (0, pi]");
    }
}

double sphere_area(int N) {
    if (N < 2) throw std::domain_error("sphere_area: N must be >= 2");
    return unit_sphere_surface(N);
}

double cap_measure(int N, double r) {
    if (N < 2) throw std::domain_error("cap_measure: N must be >= 2");
    if (r < 0.0 || r > kPi) throw std::domain_error("cap_measure: radius outside [0, pi]");
    if (r == 0.0) return 0.0;
    const double ring = unit_sphere_surface(N - 1);
    const double integral = integrate_adaptive(
        [N](double t) { return std::pow(std::sin(t), N - 1); }, 0.0, r);
    return ring * integral;
}

double QuadratureGrid::total_weight() const {
    NeumaierSum acc;
    for (double w : weights) acc.add(w);
    return acc.value();
}

double QuadratureGrid::spacing() const {
    if (!thetas.empty()) return kPi / static_cast<double>(thetas.size());
    if (points.empty()) return kPi;
    return kPi / std::sqrt(static_cast<double>(points.size()));
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int m = (n + 1) / 2;  // roots come in +/- pairs
    for (int i = 0; i < m; ++i) {
        // Tricomi-style initial guess, then Newton on the Legendre recurrence.
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        weights[n - 1 - i] = weights[i];
    }
}

QuadratureGrid build_quadrature_grid(int n_max) {
    if (n_max < 0) throw std::invalid_argument("build_quadrature_grid: n_max must be >= 0");
    const int L = n_max + 1;
    const int M = 2 * (n_max + 1);

    std::vector<double> gl_nodes;
    std::vector<double> gl_weights;
    gauss_legendre(L, gl_nodes, gl_weights);

    QuadratureGrid grid;
    grid.band_limit = n_max;
    grid.thetas.resize(L);
    grid.theta_weights = gl_weights;
    grid.phis.resize(M);
    for (int j = 0; j < M; ++j) grid.phis[j] = 2.0 * kPi * j / M;
    // Descending node order gives ascending colatitude.
    for (int i = 0; i < L; ++i) grid.thetas[i] = std::acos(gl_nodes[L - 1 - i]);
    std::reverse(grid.theta_weights.begin(), grid.theta_weights.end());

    const double phi_weight = 2.0 * kPi / M;
    grid.points.reserve(static_cast<std::size_t>(L) * M);
    grid.weights.reserve(static_cast<std::size_t>(L) * M);
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < M; ++j) {
            grid.points.push_back(SpherePoint::from_angles(grid.thetas[i], grid.phis[j]));
            grid.weights.push_back(grid.theta_weights[i] * phi_weight);
        }
    }
    return grid;
}

QuadratureGrid cap_restrict(const QuadratureGrid& grid, const Cap& cap) {
    QuadratureGrid out;
    out.band_limit = -1;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (geodesic_distance(cap.center, grid.points[i]) <= cap.radius) {
            out.points.push_back(grid.points[i]);
            out.weights.push_back(grid.weights[i]);
        }
    }
    return out;
}

void write_grid_csv(const QuadratureGrid& grid, std::ostream& os) {
    os << "theta,phi,weight\n";
    char buf[96];
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& p = grid.points[i];
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", p.theta(), p.phi(), grid.weights[i]);
        os << buf;
    }
}

}  // namespace cesphere
