#pragma once

#include "conecert/bipoly.hpp"

namespace conecert {

// z -> poly(z, zbar) * e^{-|z|^2 / 4} with an exact polynomial part; the
// Gaussian factor is tracked symbolically, so Weyl operators reduce to exact
// polynomial operations.
struct GaussPoly {
    BiPoly poly;

    explicit GaussPoly(BiPoly p) : poly(std::move(p)) {}
    int n() const { return poly.n(); }
    bool is_zero() const { return poly.is_zero(); }

    std::complex<double> evaluate(std::span<const std::complex<double>> z) const;

    GaussPoly scaled(const ExactComplex& c) const { return GaussPoly(poly.scaled(c)); }
    GaussPoly operator+(const GaussPoly& rhs) const { return GaussPoly(poly + rhs.poly); }
    GaussPoly operator-(const GaussPoly& rhs) const { return GaussPoly(poly - rhs.poly); }
    friend bool operator==(const GaussPoly&, const GaussPoly&) = default;
};

// Exact monomial coefficients of the generalized Laguerre polynomial
// L_k^{nu}(x), degree k, via the three-term recurrence.
std::vector<Rational> laguerre_coefficients(int k, int nu);

// phi_k^{nu} on C^n: L_k^{nu}(|z|^2/2) e^{-|z|^2/4}. phi_k^{nu}(0) = C(k+nu, k).
GaussPoly laguerre_phi(int k, int nu, int n);

// Radial profile phi_k^{nu}(rho) = L_k^{nu}(rho^2/2) e^{-rho^2/4}.
double laguerre_phi_radial(int k, int nu, double rho);

// Right-invariant operators for the twisted convolution. On the polynomial
// part h of a GaussPoly: Atilde_j = d/dz_j, Atilde*_j = d/dzbar_j - z_j/2.
GaussPoly weyl_lower(const GaussPoly& g, int j);
GaussPoly weyl_raise(const GaussPoly& g, int j);

// P(Atilde) g = sum c_ab (Atilde*)^alpha (Atilde)^beta g: the Atilde^beta
// string acts first, then the Atilde*^alpha string, per the operator order.
GaussPoly weyl_apply(const BiPoly& p, const GaussPoly& g);

// When g = c * P * phi with phi radial (the Weyl image shape), recovers the
// exact scalar c such that g.poly = c * (P * phi.poly); nullopt otherwise.
std::optional<ExactComplex> exact_scalar_ratio(const BiPoly& numerator, const BiPoly& denominator);

}  // namespace conecert
