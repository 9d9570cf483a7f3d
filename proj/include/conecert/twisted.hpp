#pragma once

#include <functional>

#include "conecert/config.hpp"
#include "conecert/gauss_poly.hpp"
#include "conecert/quadrature.hpp"

namespace conecert {

using ComplexPoint = Eigen::VectorXcd;
using Integrand = std::function<std::complex<double>(std::span<const std::complex<double>>)>;

// Numeric failures the CLI maps to exit 3 (tolerance / convergence), as
// opposed to mathematical counterexamples (exit 2) and usage errors (exit 1).
struct NumericFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RuleMeta {
    std::string kind;
    int n = 0;
    int degree = 0;
};

struct MeanReport {
    std::complex<double> value;
    double err_est = 0.0;  // |value(degree) - value(check degree)|
    RuleMeta rule;
};

// Twisted spherical mean f x mu_r(z) = int_{|w|=r} f(z-w) e^{i/2 Im(z.wbar)}
// dmu_r(w); with `weight` P the measure becomes dnu_r = P dmu_r, P evaluated
// at the integration point w on the radius-r sphere.
MeanReport twisted_mean(const Integrand& f, const ComplexPoint& z, double r,
                        const BiPoly* weight, const NumericConfig& cfg);
MeanReport twisted_mean(const GaussPoly& f, const ComplexPoint& z, double r,
                        const BiPoly* weight, const NumericConfig& cfg);

// Twisted convolution f x g(z) = int_{C^n} f(z-w) g(w) e^{i/2 Im(z.wbar)} dw
// for GaussPoly inputs, n <= 2. Gauss-Hermite tensor rule centered at z/2;
// the integrand's Gaussian factor cancels the GH weight exactly, so the rule
// is exact on the polynomial parts up to phase truncation.
MeanReport twisted_conv(const GaussPoly& f, const GaussPoly& g, const ComplexPoint& z,
                        const NumericConfig& cfg);

// B_k^n = k! (n-1)! / (n+k-1)!.
Rational radial_b_constant(int n, int k);

struct RadialExpansion {
    std::vector<std::complex<double>> coefficients;  // B_k^n <f, phi_k^{n-1}>
    double tail_estimate = 0.0;
    // The expansion lemma's pairing: <f,g> = (2pi)^{-n} int_{C^n} f conj(g);
    // with it radial_expand(phi_j) is exactly the j-th unit vector.
    std::string normalization = "inner product (2pi)^{-n} Lebesgue";
};

// Laguerre coefficients of a radial function f(rho) with e^{|z|^2/4} f in
// L^p decay; generalized Gauss-Laguerre of order n-1 with a two-size tail
// check. Throws NumericFailure when the tail estimate exceeds abs_tol.
RadialExpansion radial_expand(const std::function<double(double)>& f_radial, int k_max, int n,
                              const NumericConfig& cfg);

// Mean of f over the geodesic sphere {v in S^{d-1} : pole . v = t}, i.e.
// v = t pole + sqrt(1-t^2) u with u a unit vector orthogonal to the pole.
MeanReport geodesic_mean(const std::function<std::complex<double>(const Eigen::VectorXd&)>& f,
                         const Eigen::VectorXd& pole, double t, const NumericConfig& cfg);

struct Lemma42Report {
    int n = 2, p = 0, q = 0, k = 0;
    bool zero_branch = false;   // k < q: the mean vanishes identically
    double max_abs_value = 0.0; // zero branch: largest |value| seen
    // z-separability: coefficient of variation of value / (P(z) phi_{k-q}(z))
    // across z at fixed r, maximized over r.
    double max_cv = 0.0;
    // relative residual of the fitted r-profile against r^{2(p+q)} phi_{k-q}(r)
    double profile_residual = 0.0;
    std::complex<double> fitted_constant;  // estimate of (2pi)^{-n} C(n,p,q)
    std::vector<double> r_samples;
    std::vector<ComplexPoint> z_samples;
};

// Verifies the weighted functional equation phi_k^{n-1} x nu_r(z) =
// (2pi)^{-n} C(n,p,q) r^{2(p+q)} phi_{k-q}^{n+p+q-1}(r) P(z)
// phi_{k-q}^{n+p+q-1}(z) by quadrature; P = weight must lie in H_{p,q}.
Lemma42Report lemma42_check(const BiPoly& weight, int k, std::vector<ComplexPoint> z_samples,
                            std::vector<double> r_samples, const NumericConfig& cfg);

// Deterministic sample points for lemma42_check (moderate norms, no special
// symmetry); callers filter against zeros of the reference product.
std::vector<ComplexPoint> default_z_samples(int n, int count);

struct DichotomyReport {
    double max_on_zero_set = 0.0;  // means at P^{-1}(0) samples: expect ~ 0
    double max_on_cone = 0.0;      // means at certified cone points: bounded away from 0
    double vanish_tol = 0.0;
    double detect_threshold = 0.0;
    std::vector<double> r_samples;
    int k_max = 0;
    bool zero_set_vanishes() const { return max_on_zero_set < vanish_tol; }
    bool cone_detects() const { return max_on_cone > detect_threshold; }
};

// The injectivity dichotomy: weighted means of radial f = phi_k vanish on
// P^{-1}(0) for every r, while certified non-harmonic cone points see the
// function. zero_points defaults to coordinate-hyperplane samples that P
// annihilates exactly.
DichotomyReport noninjectivity_demo(const BiPoly& weight, int k_max,
                                    const std::vector<ComplexPoint>& cone_points,
                                    const NumericConfig& cfg,
                                    std::vector<ComplexPoint> zero_points = {},
                                    std::vector<double> r_samples = {0.5, 1.0, 1.5, 2.0});

// Shared sphere-rule cache (read-only after construction).
const SphereRule& cached_sphere_rule(int n, int degree);

}  // namespace conecert
