#pragma once

#include <Eigen/Core>
#include <complex>
#include <string>
#include <vector>

namespace conecert {

struct ConeSampleResult {
    std::vector<Eigen::VectorXcd> points;  // each satisfies |H(z)| < 1e-10 |z|^2
    std::vector<double> residuals;         // |H(z)| / |z|^2 per point
    std::string note;                      // reason when empty, orbit info otherwise
    bool empty() const { return points.empty(); }
};

// Samples nonzero points of H^{-1}(0), H = a z_1 zbar_2 + |z|^2, along the
// chart z = z_1 (1, t, 0, ..., 0): t solves a tbar + 1 + |t|^2 = 0, which has
// solutions t = -s a/|a| with s^2 - |a| s + 1 = 0. Scaling orbit samples
// lambda z are included (the zero set is a complex cone). Nonzero points
// exist iff |a| >= 2; below that the result is empty with an explanation.
ConeSampleResult cone_sample(std::complex<double> a, int n, int count);

}  // namespace conecert
