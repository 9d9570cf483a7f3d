#include "conecert/twisted.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "conecert/certify.hpp"

namespace conecert {

namespace {

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
    const int workers = std::min<int>(resolve_thread_count(threads), static_cast<int>(count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
}

double imag_hermitian_dot(const ComplexPoint& z, const ComplexPoint& w) {
    std::complex<double> dot{0.0, 0.0};
    for (int k = 0; k < z.size(); ++k) dot += z(k) * std::conj(w(k));
    return dot.imag();
}

std::complex<double> sphere_pass(const Integrand& f, const ComplexPoint& z, double r,
                                 const BiPoly* weight, const SphereRule& rule, int threads) {
    std::vector<std::complex<double>> terms(static_cast<std::size_t>(rule.size()));
    std::atomic<bool> bad{false};
    parallel_for(terms.size(), threads, [&](std::size_t i) {
        const ComplexPoint w = r * rule.nodes[i];
        const ComplexPoint shifted = z - w;
        std::complex<double> v =
            f(std::span<const std::complex<double>>(shifted.data(),
                                                    static_cast<std::size_t>(shifted.size()))) *
            std::exp(std::complex<double>(0.0, 0.5 * imag_hermitian_dot(z, w)));
        if (weight)
            v *= weight->evaluate(
                std::span<const std::complex<double>>(w.data(), static_cast<std::size_t>(w.size())));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) bad = true;
        terms[i] = rule.weights(static_cast<int>(i)) * v;
    });
    if (bad) throw NumericFailure("twisted_mean: non-finite integrand value");
    return pairwise_sum(std::move(terms));
}

}  // namespace

const SphereRule& cached_sphere_rule(int n, int degree) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<SphereRule>> cache;
    std::scoped_lock lock(mutex);
    auto& slot = cache[{n, degree}];
    if (!slot) slot = std::make_unique<SphereRule>(sphere_quadrature(n, degree));
    return *slot;
}

MeanReport twisted_mean(const Integrand& f, const ComplexPoint& z, double r,
                        const BiPoly* weight, const NumericConfig& cfg) {
    if (r <= 0.0) throw std::invalid_argument("twisted_mean: radius must be positive");
    const int n = static_cast<int>(z.size());
    const SphereRule& lo = cached_sphere_rule(n, cfg.quad_degree);
    const SphereRule& hi = cached_sphere_rule(n, cfg.quad_degree_check);
    const std::complex<double> coarse = sphere_pass(f, z, r, weight, lo, cfg.threads);
    const std::complex<double> fine = sphere_pass(f, z, r, weight, hi, cfg.threads);
    return MeanReport{fine, std::abs(fine - coarse),
                      RuleMeta{"sphere", n, cfg.quad_degree_check}};
}

MeanReport twisted_mean(const GaussPoly& f, const ComplexPoint& z, double r,
                        const BiPoly* weight, const NumericConfig& cfg) {
    if (static_cast<int>(z.size()) != f.n())
        throw std::invalid_argument("twisted_mean: point dimension does not match f");
    return twisted_mean(
        [&f](std::span<const std::complex<double>> w) { return f.evaluate(w); }, z, r, weight,
        cfg);
}

namespace {

std::complex<double> conv_pass(const GaussPoly& f, const GaussPoly& g, const ComplexPoint& z,
                               int gh_points, int threads) {
    const int n = f.n();
    const Rule1D gh = gauss_hermite(gh_points);
    const int axes = 2 * n;
    std::size_t total = 1;
    for (int a = 0; a < axes; ++a) total *= static_cast<std::size_t>(gh.size());

    // w = z/2 + sqrt(2)(x_{2k} + i x_{2k+1}); then |z-w|^2/4 + |w|^2/4 =
    // sum x_a^2 + |z|^2/8, so the GH weight absorbs the Gaussian exactly and
    // dw contributes 2^n.
    const double gauss_prefactor = std::exp(-z.squaredNorm() / 8.0) * std::pow(2.0, n);
    std::vector<std::complex<double>> terms(total);
    parallel_for(total, threads, [&](std::size_t idx) {
        std::size_t rem = idx;
        double wprod = 1.0;
        ComplexPoint w(n);
        for (int k = 0; k < n; ++k) {
            const int i_re = static_cast<int>(rem % static_cast<std::size_t>(gh.size()));
            rem /= static_cast<std::size_t>(gh.size());
            const int i_im = static_cast<int>(rem % static_cast<std::size_t>(gh.size()));
            rem /= static_cast<std::size_t>(gh.size());
            wprod *= gh.weights(i_re) * gh.weights(i_im);
            w(k) = z(k) / 2.0 +
                   std::sqrt(2.0) * std::complex<double>(gh.nodes(i_re), gh.nodes(i_im));
        }
        const ComplexPoint shifted = z - w;
        auto span_of = [](const ComplexPoint& v) {
            return std::span<const std::complex<double>>(v.data(),
                                                         static_cast<std::size_t>(v.size()));
        };
        // Polynomial parts only: the Gaussians are already accounted for.
        const std::complex<double> val =
            f.poly.evaluate(span_of(shifted)) * g.poly.evaluate(span_of(w)) *
            std::exp(std::complex<double>(0.0, 0.5 * imag_hermitian_dot(z, w)));
        terms[idx] = wprod * val;
    });
    return gauss_prefactor * pairwise_sum(std::move(terms));
}

}  // namespace

MeanReport twisted_conv(const GaussPoly& f, const GaussPoly& g, const ComplexPoint& z,
                        const NumericConfig& cfg) {
    const int n = f.n();
    if (g.n() != n || static_cast<int>(z.size()) != n)
        throw std::invalid_argument("twisted_conv: dimension mismatch");
    if (n > 2)
        throw std::invalid_argument("twisted_conv: only n <= 2 (4 real dimensions) supported");
    const std::complex<double> coarse = conv_pass(f, g, z, cfg.hermite_degree, cfg.threads);
    const std::complex<double> fine = conv_pass(f, g, z, cfg.hermite_degree + 6, cfg.threads);
    return MeanReport{fine, std::abs(fine - coarse),
                      RuleMeta{"complex_space", n, cfg.hermite_degree}};
}

Rational radial_b_constant(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("radial_b_constant: n >= 1, k >= 0");
    return Rational(factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(n - 1)) /
                    factorial(static_cast<unsigned>(n + k - 1)));
}

namespace {

std::vector<std::complex<double>> radial_pass(const std::function<double(double)>& f_radial,
                                              int k_max, int n, int points) {
    // <f, phi_k> against (2pi)^{-n} Lebesgue reduces to
    // (1/(n-1)!) int_0^inf f(sqrt(2u)) L_k^{n-1}(u) e^{u/2} u^{n-1} e^{-u} du.
    const Rule1D gl = gauss_laguerre(points, n - 1);
    std::vector<std::complex<double>> coeffs;
    const double inv_fact = 1.0 / to_double(factorial(static_cast<unsigned>(n - 1)));
    for (int k = 0; k <= k_max; ++k) {
        const auto lag = laguerre_coefficients(k, n - 1);
        std::vector<double> terms(static_cast<std::size_t>(gl.size()));
        for (int i = 0; i < gl.size(); ++i) {
            const double u = gl.nodes(i);
            double lk = 0.0;
            for (std::size_t d = lag.size(); d-- > 0;) lk = lk * u + to_double(lag[d]);
            terms[static_cast<std::size_t>(i)] =
                gl.weights(i) * f_radial(std::sqrt(2.0 * u)) * lk * std::exp(u / 2.0);
        }
        const double bk = to_double(radial_b_constant(n, k));
        coeffs.emplace_back(bk * inv_fact * pairwise_sum(std::move(terms)), 0.0);
    }
    return coeffs;
}

}  // namespace

RadialExpansion radial_expand(const std::function<double(double)>& f_radial, int k_max, int n,
                              const NumericConfig& cfg) {
    if (k_max < 0) throw std::invalid_argument("radial_expand: k_max must be >= 0");
    if (n < 1) throw std::invalid_argument("radial_expand: n must be >= 1");
    const auto coarse = radial_pass(f_radial, k_max, n, cfg.laguerre_points);
    const auto fine = radial_pass(f_radial, k_max, n, cfg.laguerre_points + 16);
    double tail = 0.0;
    for (std::size_t i = 0; i < coarse.size(); ++i)
        tail = std::max(tail, std::abs(coarse[i] - fine[i]));
    if (tail > cfg.abs_tol) {
        std::ostringstream msg;
        msg << "radial_expand: non-convergent tail, estimate " << tail << " exceeds tolerance "
            << cfg.abs_tol << " (is e^{|z|^2/4} f integrable?)";
        throw NumericFailure(msg.str());
    }
    return RadialExpansion{fine, tail, "inner product (2pi)^{-n} Lebesgue"};
}

namespace {

std::complex<double> geodesic_pass(
    const std::function<std::complex<double>(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& pole, double t, int degree) {
    const int d = static_cast<int>(pole.size());
    // Orthonormal completion of the pole: Householder QR of the single column.
    Eigen::MatrixXd pole_col = pole;
    const Eigen::MatrixXd qfull =
        Eigen::HouseholderQR<Eigen::MatrixXd>(pole_col).householderQ();
    // First column of Q is +-pole; the remaining columns span the
    // orthocomplement, which is all we use.
    const Eigen::MatrixXd tangent = qfull.rightCols(d - 1);

    const RealSphereRule rule = real_sphere_quadrature(d - 1, degree);
    const double radial = std::sqrt(1.0 - t * t);
    std::vector<std::complex<double>> terms(static_cast<std::size_t>(rule.size()));
    for (int i = 0; i < rule.size(); ++i) {
        const Eigen::VectorXd v =
            t * pole + radial * (tangent * rule.nodes[static_cast<std::size_t>(i)]);
        terms[static_cast<std::size_t>(i)] = rule.weights(i) * f(v);
    }
    return pairwise_sum(std::move(terms));
}

}  // namespace

MeanReport geodesic_mean(const std::function<std::complex<double>(const Eigen::VectorXd&)>& f,
                         const Eigen::VectorXd& pole, double t, const NumericConfig& cfg) {
    if (std::abs(t) >= 1.0)
        throw std::invalid_argument("geodesic_mean: requires |t| < 1");
    const double norm = pole.norm();
    if (norm == 0.0) throw std::invalid_argument("geodesic_mean: pole must be nonzero");
    const Eigen::VectorXd unit = pole / norm;
    const std::complex<double> coarse = geodesic_pass(f, unit, t, cfg.quad_degree);
    const std::complex<double> fine = geodesic_pass(f, unit, t, cfg.quad_degree_check);
    return MeanReport{fine, std::abs(fine - coarse),
                      RuleMeta{"geodesic", static_cast<int>(pole.size()), cfg.quad_degree_check}};
}

std::vector<ComplexPoint> default_z_samples(int n, int count) {
    // Deterministic low-symmetry points with norms spread through [0.4, 1.6].
    std::vector<ComplexPoint> out;
    for (int i = 0; i < count; ++i) {
        ComplexPoint z(n);
        for (int k = 0; k < n; ++k) {
            const double re = 0.31 + 0.17 * std::cos(1.7 * (i + 1) + 2.3 * k + 0.4);
            const double im = -0.23 + 0.19 * std::sin(2.1 * (i + 1) + 1.1 * k + 1.2);
            z(k) = std::complex<double>(re, im);
        }
        z *= 0.7 + 0.12 * (i % 5);
        out.push_back(std::move(z));
    }
    return out;
}

Lemma42Report lemma42_check(const BiPoly& weight, int k, std::vector<ComplexPoint> z_samples,
                            std::vector<double> r_samples, const NumericConfig& cfg) {
    const auto bd = weight.bidegree();
    if (!bd) throw std::invalid_argument("lemma42_check: weight must be bihomogeneous");
    if (!weight.laplacian().is_zero())
        throw std::invalid_argument("lemma42_check: weight must be harmonic");
    const int n = weight.n();
    if (n != 2) throw std::invalid_argument("lemma42_check: only n = 2 is supported");
    const auto [p, q] = *bd;
    if (k < 0) throw std::invalid_argument("lemma42_check: k must be >= 0");
    if (z_samples.empty() || r_samples.empty())
        throw std::invalid_argument("lemma42_check: needs z and r samples");

    Lemma42Report report;
    report.n = n;
    report.p = p;
    report.q = q;
    report.k = k;
    report.r_samples = r_samples;
    report.z_samples = z_samples;

    const GaussPoly f = laguerre_phi(k, n - 1, n);
    if (k < q) {
        report.zero_branch = true;
        for (const auto& z : z_samples)
            for (double r : r_samples)
                report.max_abs_value = std::max(
                    report.max_abs_value, std::abs(twisted_mean(f, z, r, &weight, cfg).value));
        return report;
    }

    const int nu2 = n + p + q - 1;
    auto z_reference = [&](const ComplexPoint& z) {
        const std::complex<double> pz = weight.evaluate(
            std::span<const std::complex<double>>(z.data(), static_cast<std::size_t>(z.size())));
        return pz * laguerre_phi_radial(k - q, nu2, z.norm());
    };
    for (const auto& z : z_samples) {
        if (std::abs(z_reference(z)) < 1e-9) {
            std::ostringstream msg;
            msg << "lemma42_check: sample at a zero of the reference product P(z) phi_{k-q}(z)";
            throw std::invalid_argument(msg.str());
        }
    }

    std::vector<std::complex<double>> profile;  // mean over z of value / zref
    for (double r : r_samples) {
        std::vector<std::complex<double>> ratios;
        for (const auto& z : z_samples)
            ratios.push_back(twisted_mean(f, z, r, &weight, cfg).value / z_reference(z));
        std::complex<double> mean{0.0, 0.0};
        for (const auto& v : ratios) mean += v;
        mean /= static_cast<double>(ratios.size());
        double var = 0.0;
        for (const auto& v : ratios) var += std::norm(v - mean);
        var /= static_cast<double>(ratios.size());
        report.max_cv = std::max(report.max_cv, std::sqrt(var) / std::abs(mean));
        profile.push_back(mean);
    }

    // Least-squares fit of profile(r) = c * r^{2(p+q)} phi_{k-q}^{nu2}(r).
    std::complex<double> num{0.0, 0.0};
    double den = 0.0;
    std::vector<double> ref(r_samples.size());
    for (std::size_t i = 0; i < r_samples.size(); ++i) {
        ref[i] = std::pow(r_samples[i], 2.0 * (p + q)) *
                 laguerre_phi_radial(k - q, nu2, r_samples[i]);
        num += ref[i] * profile[i];
        den += ref[i] * ref[i];
    }
    if (den == 0.0) throw NumericFailure("lemma42_check: reference r-profile vanishes on samples");
    report.fitted_constant = num / den;
    double max_dev = 0.0, max_val = 0.0;
    for (std::size_t i = 0; i < r_samples.size(); ++i) {
        max_dev = std::max(max_dev, std::abs(profile[i] - report.fitted_constant * ref[i]));
        max_val = std::max(max_val, std::abs(profile[i]));
    }
    report.profile_residual = max_val == 0.0 ? 0.0 : max_dev / max_val;
    return report;
}

DichotomyReport noninjectivity_demo(const BiPoly& weight, int k_max,
                                    const std::vector<ComplexPoint>& cone_points,
                                    const NumericConfig& cfg,
                                    std::vector<ComplexPoint> zero_points,
                                    std::vector<double> r_samples) {
    if (weight.n() != 2)
        throw std::invalid_argument("noninjectivity_demo: only n = 2 is supported");
    if (cone_points.empty())
        throw std::invalid_argument("noninjectivity_demo: empty cone sample");
    const int n = weight.n();

    if (zero_points.empty()) {
        // Coordinate-hyperplane candidates; keep those weight annihilates.
        for (int axis = 0; axis < n; ++axis) {
            for (int i = 0; i < 4; ++i) {
                ComplexPoint z = default_z_samples(n, 8)[static_cast<std::size_t>(i + 2)];
                z(axis) = 0.0;
                const std::complex<double> pz = weight.evaluate(std::span<const std::complex<double>>(
                    z.data(), static_cast<std::size_t>(z.size())));
                if (std::abs(pz) < 1e-13) zero_points.push_back(std::move(z));
            }
        }
        if (zero_points.empty())
            throw std::invalid_argument(
                "noninjectivity_demo: no coordinate-hyperplane zeros of the weight; "
                "pass explicit zero-set samples");
    }

    DichotomyReport report;
    report.vanish_tol = cfg.abs_tol;
    report.detect_threshold = 1e-3;
    report.r_samples = r_samples;
    report.k_max = k_max;
    for (int k = 0; k <= k_max; ++k) {
        const GaussPoly f = laguerre_phi(k, n - 1, n);
        for (double r : r_samples) {
            for (const auto& z : zero_points)
                report.max_on_zero_set = std::max(
                    report.max_on_zero_set, std::abs(twisted_mean(f, z, r, &weight, cfg).value));
            for (const auto& z : cone_points)
                report.max_on_cone = std::max(report.max_on_cone,
                                              std::abs(twisted_mean(f, z, r, &weight, cfg).value));
        }
    }
    return report;
}

}  // namespace conecert
