#include "conecert/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conecert {

namespace {

// Nodes and weights from the three-term recurrence: diagonal a_k, subdiagonal
// b_k, and mu0 = integral of the weight function.
Rule1D golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& subdiag, double mu0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, subdiag);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("golub_welsch: eigensolver failed");
    Rule1D rule;
    rule.nodes = solver.eigenvalues();
    rule.weights.resize(diag.size());
    for (int i = 0; i < diag.size(); ++i) {
        const double v0 = solver.eigenvectors()(0, i);
        rule.weights(i) = mu0 * v0 * v0;
    }
    return rule;
}

void check_points(int points) {
    if (points < 1) throw std::invalid_argument("quadrature: needs at least one point");
}

}  // namespace

Rule1D gauss_legendre(int points) {
    check_points(points);
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(points);
    Eigen::VectorXd sub(points - 1 > 0 ? points - 1 : 0);
    for (int k = 1; k < points; ++k) sub(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
    return golub_welsch(diag, sub, 2.0);
}

Rule1D gauss_hermite(int points) {
    check_points(points);
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(points);
    Eigen::VectorXd sub(points - 1 > 0 ? points - 1 : 0);
    for (int k = 1; k < points; ++k) sub(k - 1) = std::sqrt(k / 2.0);
    return golub_welsch(diag, sub, std::sqrt(std::numbers::pi));
}

Rule1D gauss_laguerre(int points, double alpha) {
    check_points(points);
    if (alpha <= -1.0) throw std::invalid_argument("gauss_laguerre: alpha must exceed -1");
    Eigen::VectorXd diag(points);
    Eigen::VectorXd sub(points - 1 > 0 ? points - 1 : 0);
    for (int k = 0; k < points; ++k) diag(k) = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < points; ++k) sub(k - 1) = std::sqrt(k * (k + alpha));
    return golub_welsch(diag, sub, std::tgamma(alpha + 1.0));
}

Rule1D gauss_jacobi_symmetric(int points, double lam) {
    check_points(points);
    if (lam <= -1.0) throw std::invalid_argument("gauss_jacobi_symmetric: lambda must exceed -1");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(points);
    Eigen::VectorXd sub(points - 1 > 0 ? points - 1 : 0);
    for (int k = 1; k < points; ++k) {
        const double num = k * (k + 2.0 * lam);
        const double den = (2.0 * k + 2.0 * lam + 1.0) * (2.0 * k + 2.0 * lam - 1.0);
        sub(k - 1) = std::sqrt(num / den);
    }
    // mu0 = int_{-1}^{1} (1-x^2)^lam dx = sqrt(pi) Gamma(lam+1) / Gamma(lam+3/2)
    const double mu0 = std::sqrt(std::numbers::pi) *
                       std::exp(std::lgamma(lam + 1.0) - std::lgamma(lam + 1.5));
    return golub_welsch(diag, sub, mu0);
}

SphereRule sphere_quadrature(int n, int degree) {
    if (degree < 0) throw std::invalid_argument("sphere_quadrature: negative degree");
    if (n == 2) {
        const int n_lat = degree / 2 + 2;
        const int n_phase = degree + 1;
        const Rule1D lat = gauss_legendre(n_lat);
        SphereRule rule;
        rule.n = 2;
        rule.degree = degree;
        rule.nodes.reserve(static_cast<std::size_t>(n_lat) * n_phase * n_phase);
        std::vector<double> wts;
        for (int i = 0; i < n_lat; ++i) {
            const double u = lat.nodes(i);  // u = cos(2 eta)
            const double c = std::sqrt((1.0 + u) / 2.0);
            const double s = std::sqrt((1.0 - u) / 2.0);
            const double w = lat.weights(i) / (2.0 * n_phase * n_phase);
            for (int j1 = 0; j1 < n_phase; ++j1) {
                const double xi1 = 2.0 * std::numbers::pi * j1 / n_phase;
                const std::complex<double> z1 = c * std::exp(std::complex<double>(0.0, xi1));
                for (int j2 = 0; j2 < n_phase; ++j2) {
                    const double xi2 = 2.0 * std::numbers::pi * j2 / n_phase;
                    Eigen::VectorXcd z(2);
                    z << z1, s * std::exp(std::complex<double>(0.0, xi2));
                    rule.nodes.push_back(std::move(z));
                    wts.push_back(w);
                }
            }
        }
        rule.weights = Eigen::Map<Eigen::VectorXd>(wts.data(), static_cast<long>(wts.size()));
        return rule;
    }
    if (n == 3) {
        // z = (cos(eta) e^{i xi1}, sin(eta) w), w in S^3. With x = sin^2(eta)
        // the normalized latitude measure is 2 x dx on [0,1]; surviving
        // integrands are polynomials in x.
        const int n_lat = degree / 2 + 2;
        const int n_phase = degree + 1;
        const Rule1D lat = gauss_legendre(n_lat);
        const SphereRule inner = sphere_quadrature(2, degree);
        SphereRule rule;
        rule.n = 3;
        rule.degree = degree;
        std::vector<double> wts;
        for (int i = 0; i < n_lat; ++i) {
            const double x = (lat.nodes(i) + 1.0) / 2.0;  // sin^2(eta)
            const double c = std::sqrt(1.0 - x);
            const double s = std::sqrt(x);
            const double w_lat = lat.weights(i) * x / 2.0;  // GL on [-1,1] -> 2x dx on [0,1]
            for (int j = 0; j < n_phase; ++j) {
                const double xi1 = 2.0 * std::numbers::pi * j / n_phase;
                const std::complex<double> z1 = c * std::exp(std::complex<double>(0.0, xi1));
                for (int m = 0; m < inner.size(); ++m) {
                    Eigen::VectorXcd z(3);
                    z << z1, s * inner.nodes[static_cast<std::size_t>(m)](0),
                        s * inner.nodes[static_cast<std::size_t>(m)](1);
                    rule.nodes.push_back(std::move(z));
                    wts.push_back(w_lat / n_phase * inner.weights(m));
                }
            }
        }
        rule.weights = Eigen::Map<Eigen::VectorXd>(wts.data(), static_cast<long>(wts.size()));
        return rule;
    }
    throw std::invalid_argument("sphere_quadrature: only n in {2,3} is supported");
}

RealSphereRule real_sphere_quadrature(int dim, int degree) {
    if (degree < 0) throw std::invalid_argument("real_sphere_quadrature: negative degree");
    RealSphereRule rule;
    rule.dim = dim;
    rule.degree = degree;
    if (dim < 1) throw std::invalid_argument("real_sphere_quadrature: dim must be >= 1");
    if (dim == 1) {
        for (double v : {1.0, -1.0}) {
            Eigen::VectorXd node(1);
            node << v;
            rule.nodes.push_back(std::move(node));
        }
        rule.weights = Eigen::VectorXd::Constant(2, 0.5);
        return rule;
    }
    if (dim == 2) {
        const int m = degree + 1;
        std::vector<double> wts;
        for (int j = 0; j < m; ++j) {
            const double phi = 2.0 * std::numbers::pi * j / m;
            Eigen::VectorXd node(2);
            node << std::cos(phi), std::sin(phi);
            rule.nodes.push_back(std::move(node));
            wts.push_back(1.0 / m);
        }
        rule.weights = Eigen::Map<Eigen::VectorXd>(wts.data(), static_cast<long>(wts.size()));
        return rule;
    }
    // v = (x, sqrt(1-x^2) u), u in S^{dim-2}; latitude weight (1-x^2)^{(dim-3)/2}.
    const double lam = (dim - 3) / 2.0;
    const int n_lat = degree / 2 + 2;
    const Rule1D lat = gauss_jacobi_symmetric(n_lat, lam);
    const double mu0 = lat.weights.sum();
    const RealSphereRule inner = real_sphere_quadrature(dim - 1, degree);
    std::vector<double> wts;
    for (int i = 0; i < n_lat; ++i) {
        const double x = lat.nodes(i);
        const double sin_part = std::sqrt(std::max(0.0, 1.0 - x * x));
        for (int m = 0; m < inner.size(); ++m) {
            Eigen::VectorXd node(dim);
            node(0) = x;
            node.tail(dim - 1) = sin_part * inner.nodes[static_cast<std::size_t>(m)];
            rule.nodes.push_back(std::move(node));
            wts.push_back(lat.weights(i) / mu0 * inner.weights(m));
        }
    }
    rule.weights = Eigen::Map<Eigen::VectorXd>(wts.data(), static_cast<long>(wts.size()));
    return rule;
}

namespace {

template <typename T>
T pairwise_sum_impl(std::vector<T>& terms) {
    if (terms.empty()) return T{};
    std::size_t count = terms.size();
    while (count > 1) {
        const std::size_t half = count / 2;
        for (std::size_t i = 0; i < half; ++i) terms[i] = terms[2 * i] + terms[2 * i + 1];
        if (count % 2 == 1) {
            terms[half] = terms[count - 1];
            count = half + 1;
        } else {
            count = half;
        }
    }
    return terms[0];
}

}  // namespace

std::complex<double> pairwise_sum(std::vector<std::complex<double>> terms) {
    return pairwise_sum_impl(terms);
}

double pairwise_sum(std::vector<double> terms) { return pairwise_sum_impl(terms); }

}  // namespace conecert
