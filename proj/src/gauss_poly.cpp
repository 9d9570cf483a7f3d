#include "conecert/gauss_poly.hpp"

#include <cmath>

namespace conecert {

std::complex<double> GaussPoly::evaluate(std::span<const std::complex<double>> z) const {
    double norm2 = 0.0;
    for (const auto& v : z) norm2 += std::norm(v);
    return poly.evaluate(z) * std::exp(-norm2 / 4.0);
}

std::vector<Rational> laguerre_coefficients(int k, int nu) {
    if (k < 0 || nu < 0) throw std::invalid_argument("laguerre_coefficients: k, nu >= 0");
    std::vector<Rational> prev{rational_of(1)};  // L_0 = 1
    if (k == 0) return prev;
    std::vector<Rational> cur{rational_of(1 + nu), rational_of(-1)};  // L_1 = 1 + nu - x
    for (int m = 1; m < k; ++m) {
        // (m+1) L_{m+1} = (2m + 1 + nu - x) L_m - (m + nu) L_{m-1}
        std::vector<Rational> next(static_cast<std::size_t>(m) + 2, rational_of(0));
        const Rational c0 = rational_of(2 * m + 1 + nu);
        const Rational cp = rational_of(m + nu);
        const Rational inv = rational_of(1, m + 1);
        for (std::size_t d = 0; d < cur.size(); ++d) {
            next[d] += c0 * cur[d];
            next[d + 1] -= cur[d];
        }
        for (std::size_t d = 0; d < prev.size(); ++d) next[d] -= cp * prev[d];
        for (auto& c : next) c *= inv;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

GaussPoly laguerre_phi(int k, int nu, int n) {
    const auto coeffs = laguerre_coefficients(k, nu);
    const BiPoly half_norm = BiPoly::norm_squared(n).scaled(ExactComplex(rational_of(1, 2)));
    BiPoly acc(n);
    BiPoly power = BiPoly::constant(n, ExactComplex(1));
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d] != 0) acc = acc + power.scaled(ExactComplex(coeffs[d]));
        if (d + 1 < coeffs.size()) power = power * half_norm;
    }
    return GaussPoly(std::move(acc));
}

double laguerre_phi_radial(int k, int nu, double rho) {
    const auto coeffs = laguerre_coefficients(k, nu);
    const double x = rho * rho / 2.0;
    double acc = 0.0;
    for (std::size_t d = coeffs.size(); d-- > 0;) acc = acc * x + to_double(coeffs[d]);
    return acc * std::exp(-rho * rho / 4.0);
}

GaussPoly weyl_lower(const GaussPoly& g, int j) {
    return GaussPoly(g.poly.differentiate(j, Wirtinger::Holomorphic));
}

GaussPoly weyl_raise(const GaussPoly& g, int j) {
    const int n = g.n();
    return GaussPoly(g.poly.differentiate(j, Wirtinger::Antiholomorphic) -
                     (BiPoly::variable(n, j) * g.poly).scaled(ExactComplex(rational_of(1, 2))));
}

GaussPoly weyl_apply(const BiPoly& p, const GaussPoly& g) {
    if (p.n() != g.n()) throw std::invalid_argument("weyl_apply: dimension mismatch");
    GaussPoly acc{BiPoly::zero(g.n())};
    for (const auto& [key, c] : p.terms()) {
        GaussPoly cur = g;
        for (int j = 0; j < p.n(); ++j)
            for (int rep = 0; rep < key.beta[j]; ++rep) cur = weyl_lower(cur, j);
        for (int j = 0; j < p.n(); ++j)
            for (int rep = 0; rep < key.alpha[j]; ++rep) cur = weyl_raise(cur, j);
        acc = acc + cur.scaled(c);
    }
    return acc;
}

std::optional<ExactComplex> exact_scalar_ratio(const BiPoly& numerator,
                                               const BiPoly& denominator) {
    if (denominator.is_zero()) return std::nullopt;
    if (numerator.is_zero()) return ExactComplex(0);
    const auto& lead = *denominator.terms().begin();
    const ExactComplex num_coeff = numerator.coeff(lead.first);
    if (num_coeff.is_zero()) return std::nullopt;
    const ExactComplex ratio = num_coeff / lead.second;
    if (denominator.scaled(ratio) == numerator) return ratio;
    return std::nullopt;
}

}  // namespace conecert
