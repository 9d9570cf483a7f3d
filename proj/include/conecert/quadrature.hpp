#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

namespace conecert {

struct Rule1D {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
    int size() const { return static_cast<int>(nodes.size()); }
};

// Golub-Welsch rules (symmetric tridiagonal Jacobi matrix eigenproblem).
Rule1D gauss_legendre(int points);                       // [-1,1], weight 1
Rule1D gauss_hermite(int points);                        // R, weight e^{-x^2}
Rule1D gauss_laguerre(int points, double alpha);         // [0,inf), x^alpha e^{-x}
Rule1D gauss_jacobi_symmetric(int points, double lam);   // [-1,1], (1-x^2)^lam

// Quadrature for the normalized surface measure on S^{2n-1} in C^n,
// n in {2,3}. Exact (to roundoff) for monomials z^alpha zbar^beta with
// |alpha| + |beta| <= degree; phase mismatches alpha != beta integrate to
// zero exactly by the uniform phase grids.
//
// n=2 uses Hopf coordinates z = (cos(eta) e^{i xi1}, sin(eta) e^{i xi2}) with
// Gauss-Legendre in cos(2 eta); n=3 peels z_1 off recursively.
struct SphereRule {
    int n = 2;
    int degree = 0;
    std::vector<Eigen::VectorXcd> nodes;  // unit sphere points
    Eigen::VectorXd weights;              // sum to 1
    int size() const { return static_cast<int>(nodes.size()); }
};
SphereRule sphere_quadrature(int n, int degree);

// Normalized measure on the real unit sphere S^{dim-1} in R^dim (recursive
// product rule; used for geodesic spheres).
struct RealSphereRule {
    int dim = 2;
    int degree = 0;
    std::vector<Eigen::VectorXd> nodes;
    Eigen::VectorXd weights;  // sum to 1
    int size() const { return static_cast<int>(nodes.size()); }
};
RealSphereRule real_sphere_quadrature(int dim, int degree);

// Deterministic reduction: pairwise summation in fixed index order, so the
// result is bit-identical no matter how the terms were produced.
std::complex<double> pairwise_sum(std::vector<std::complex<double>> terms);
double pairwise_sum(std::vector<double> terms);

}  // namespace conecert
