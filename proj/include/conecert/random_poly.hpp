#pragma once

#include <random>

#include "conecert/bipoly.hpp"

namespace conecert {

// Deterministic random bihomogeneous polynomial in P_{p,q}: coefficients are
// small Gaussian rationals drawn directly from the engine (no distribution
// classes, so streams are reproducible across standard libraries).
inline BiPoly random_bipoly(int n, int p, int q, std::mt19937_64& rng) {
    auto small_rational = [&rng]() {
        const long num = static_cast<long>(rng() % 19) - 9;   // -9..9
        const long den = static_cast<long>(rng() % 4) + 1;    // 1..4
        return rational_of(num, den);
    };
    BiPoly acc(n);
    for (const auto& alpha : multi_indices_of_degree(n, p))
        for (const auto& beta : multi_indices_of_degree(n, q))
            acc = acc + BiPoly::monomial(n, alpha, beta,
                                         ExactComplex(small_rational(), small_rational()));
    return acc;
}

}  // namespace conecert
