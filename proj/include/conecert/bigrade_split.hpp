#pragma once

#include <complex>
#include <map>
#include <vector>

namespace conecert {

// Splits a degree-k spherical harmonic value Y(omega) into its bigraded
// components Y_{p,q}(omega), p + q = k, from samples on the phase orbit:
// samples[m] = Y(e^{i theta_m} omega), theta_m = 2 pi m / M uniform. The DFT
// coefficient at frequency p - q recovers Y_{p,q}(omega).
//
// Recovery needs the k+1 frequencies {k - 2q} to stay distinct mod M; the
// smallest always-safe grid is 2k+1 (k+1 works when k is even). Collisions
// raise std::invalid_argument naming the aliased bidegrees.
std::map<std::pair<int, int>, std::complex<double>> bigrade_split(
    const std::vector<std::complex<double>>& samples, int k);

// Smallest grid size free of aliasing for every total degree <= k.
int recommended_grid(int k);

}  // namespace conecert
