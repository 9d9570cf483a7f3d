#include "conecert/cone_sample.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conecert {

namespace {

std::complex<double> eval_h(std::complex<double> a, const Eigen::VectorXcd& z) {
    return a * z(0) * std::conj(z(1)) + z.squaredNorm();
}

}  // namespace

ConeSampleResult cone_sample(std::complex<double> a, int n, int count) {
    if (n < 2) throw std::invalid_argument("cone_sample: requires n >= 2");
    if (a == 0.0) throw std::invalid_argument("cone_sample: requires a != 0");
    if (count < 1) throw std::invalid_argument("cone_sample: count must be positive");

    ConeSampleResult out;
    const double mod = std::abs(a);
    if (mod < 2.0) {
        out.note =
            "no nonzero points: |t|^2 - |a||t| + 1 = 0 has no real root "
            "(discriminant |a|^2 - 4 < 0), so H^{-1}(0) = {0}; "
            "nonzero cone points require |a| >= 2";
        return out;
    }

    const double disc = std::sqrt(mod * mod - 4.0);
    std::vector<double> roots{(mod - disc) / 2.0};
    if (disc > 0.0) roots.push_back((mod + disc) / 2.0);

    // Complex-scaling orbit factors: the cone satisfies lambda C = C.
    const std::vector<std::complex<double>> scalings{
        {1.0, 0.0}, {0.5, 0.0}, {1.5, 0.0}, {0.0, 1.0}, {0.6, 0.8}, {2.0, 0.0}};

    const std::complex<double> phase_a = a / mod;
    int phase_steps = 0;
    while (static_cast<int>(out.points.size()) < count) {
        const double theta = 2.0 * std::numbers::pi * phase_steps / 7.0;
        const std::complex<double> z1 = std::exp(std::complex<double>(0.0, theta));
        for (double s : roots) {
            const std::complex<double> t = -s * phase_a;
            for (const auto& lambda : scalings) {
                if (static_cast<int>(out.points.size()) >= count) break;
                Eigen::VectorXcd z = Eigen::VectorXcd::Zero(n);
                z(0) = lambda * z1;
                z(1) = lambda * t * z1;
                const double res = std::abs(eval_h(a, z)) / z.squaredNorm();
                if (res >= 1e-10)
                    throw std::runtime_error("cone_sample: residual check failed");
                out.points.push_back(std::move(z));
                out.residuals.push_back(res);
            }
        }
        ++phase_steps;
    }
    out.note = "points z1 (1, t, 0, ...) with a tbar + 1 + |t|^2 = 0, plus complex-scaling orbit";
    return out;
}

}  // namespace conecert
