#pragma once

// Points on S^N, geodesic distances, caps, surface measures, and the N = 2
// Gauss-Legendre x uniform-longitude quadrature grid that is exact for
// products of spherical harmonics up to its band limit.

#include <iosfwd>
#include <vector>

namespace cesphere {

class SpherePoint {
public:
    // coords must be a unit vector in R^{N+1}: |sum x_i^2 - 1| <= 1e-12.
    explicit SpherePoint(std::vector<double> coords);

    // N = 2 convenience: colatitude theta in [0, pi], longitude phi.
    static SpherePoint from_angles(double theta, double phi);

    [[nodiscard]] int dim() const { return static_cast<int>(coords_.size()) - 1; }
    [[nodiscard]] const std::vector<double>& coords() const { return coords_; }

    // Cached spherical angles, N = 2 only.
    [[nodiscard]] double theta() const;
    [[nodiscard]] double phi() const;

private:
    std::vector<double> coords_;
    double theta_ = -1.0;
    double phi_ = -1.0;
};

// Angle between the two unit directions, in [0, pi].
double geodesic_distance(const SpherePoint& x, const SpherePoint& y);

// Coordinatewise negation; an exact involution.
SpherePoint antipode(const SpherePoint& x);

struct Cap {
    SpherePoint center;
    double radius;  // in (0, pi]

    Cap(SpherePoint center_, double radius_);
};

// Surface measure of the unit sphere S^N, N >= 2: 2 pi^{(N+1)/2} / Gamma((N+1)/2).
double sphere_area(int N);

// sigma(B(x, r)) = |S^{N-1}| * int_0^r sin^{N-1}(t) dt, r in [0, pi].
double cap_measure(int N, double r);

// Sphere sample points with weights in surface-measure units. Grids from
// build_quadrature_grid carry their tensor structure (colatitude ring times
// longitude); grids produced by cap_restrict are plain point lists with
// band_limit = -1.
struct QuadratureGrid {
    std::vector<SpherePoint> points;
    std::vector<double> weights;
    int band_limit = -1;

    std::vector<double> thetas;         // ring colatitudes (L entries)
    std::vector<double> theta_weights;  // Gauss-Legendre weights in cos(theta)
    std::vector<double> phis;           // uniform longitudes (M entries)

    [[nodiscard]] std::size_t size() const { return points.size(); }
    [[nodiscard]] bool has_tensor_structure() const { return !thetas.empty(); }
    [[nodiscard]] double total_weight() const;
    // Colatitude step, a proxy for the mesh size.
    [[nodiscard]] double spacing() const;
};

// N = 2 grid: L = n_max+1 Gauss-Legendre colatitude rings crossed with
// M = 2(n_max+1) uniform longitudes. Integrates products of two spherical
// harmonics of degrees <= n_max exactly; M even keeps the grid closed under
// the antipodal map.
QuadratureGrid build_quadrature_grid(int n_max);

// Points of `grid` within the cap, weights unchanged. An empty result is legal.
QuadratureGrid cap_restrict(const QuadratureGrid& grid, const Cap& cap);

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// CSV with header theta,phi,weight (radians, surface-measure units).
void write_grid_csv(const QuadratureGrid& grid, std::ostream& os);

}  // namespace cesphere
