#include "conecert/bigrade_split.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

namespace conecert {

int recommended_grid(int k) { return 2 * k + 1; }

std::map<std::pair<int, int>, std::complex<double>> bigrade_split(
    const std::vector<std::complex<double>>& samples, int k) {
    if (k < 0) throw std::invalid_argument("bigrade_split: negative degree");
    const int m = static_cast<int>(samples.size());
    if (m < k + 1) {
        std::ostringstream msg;
        msg << "bigrade_split: grid of size " << m << " is too small for degree " << k
            << " (aliasing); need at least " << k + 1 << ", alias-free is " << recommended_grid(k);
        throw std::invalid_argument(msg.str());
    }
    // Frequencies p - q = k - 2q, q = 0..k, must be distinct mod M.
    auto residue = [m](int f) { return ((f % m) + m) % m; };
    for (int q1 = 0; q1 < k + 1; ++q1) {
        for (int q2 = q1 + 1; q2 < k + 1; ++q2) {
            if (residue(k - 2 * q1) == residue(k - 2 * q2)) {
                std::ostringstream msg;
                msg << "bigrade_split: grid of size " << m << " aliases bidegrees (" << k - q1
                    << "," << q1 << ") and (" << k - q2 << "," << q2 << "); use a grid of size "
                    << recommended_grid(k);
                throw std::invalid_argument(msg.str());
            }
        }
    }

    std::map<std::pair<int, int>, std::complex<double>> out;
    for (int q = 0; q <= k; ++q) {
        const int p = k - q;
        const int freq = p - q;
        std::complex<double> acc{0.0, 0.0};
        for (int j = 0; j < m; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / m;
            acc += samples[static_cast<std::size_t>(j)] *
                   std::exp(std::complex<double>(0.0, -freq * theta));
        }
        out[{p, q}] = acc / static_cast<double>(m);
    }
    return out;
}

}  // namespace conecert
